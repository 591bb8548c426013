//! Multiplication laws behind [`FiniteGroup`](super::FiniteGroup).
//!
//! Structured atoms compute products from mixed-radix coordinates, so no
//! `order x order` table is stored for them. Explicit tables are kept only
//! for table atoms and groups built from a table.

use std::sync::Arc;

#[derive(Debug)]
pub(crate) enum Component {
    Cyclic { n: usize },
    /// Direct product of cyclic groups with the given moduli, first coordinate
    /// most significant.
    Abelian { moduli: Vec<usize> },
    /// `r^a s^b` stored at `a + m*b`.
    Dihedral { m: usize },
    /// `x^a y^b` stored at `a + m*b`, with `x` of order `m` and `y^2 = x^{m/2}`.
    Quaternion { m: usize },
    Table(TableLaw),
}

#[derive(Debug)]
pub(crate) struct TableLaw {
    pub n: usize,
    pub mul: Vec<u32>,
    pub inv: Vec<u32>,
    pub identity: usize,
}

impl TableLaw {
    /// `rows` must already be validated as a group law.
    pub fn new(n: usize, mul: Vec<u32>) -> Self {
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| mul[e * n + j] as usize == j))
            .expect("validated table has an identity");
        let mut inv = vec![0u32; n];
        for (a, slot) in inv.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&b| mul[a * n + b] as usize == identity)
                .expect("validated table has inverses") as u32;
        }
        TableLaw {
            n,
            mul,
            inv,
            identity,
        }
    }
}

impl Component {
    pub fn order(&self) -> usize {
        match self {
            Component::Cyclic { n } => *n,
            Component::Abelian { moduli } => moduli.iter().product(),
            Component::Dihedral { m } | Component::Quaternion { m } => 2 * m,
            Component::Table(t) => t.n,
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Component::Cyclic { n } => (a + b) % n,
            Component::Abelian { moduli } => {
                let (mut x, mut y) = (a, b);
                let mut out = 0;
                let mut scale = 1;
                for &m in moduli.iter().rev() {
                    out += ((x % m + y % m) % m) * scale;
                    x /= m;
                    y /= m;
                    scale *= m;
                }
                out
            }
            Component::Dihedral { m } => {
                let (a1, b1) = (a % m, a / m);
                let (a2, b2) = (b % m, b / m);
                let rot = (if b1 == 0 { a1 + a2 } else { a1 + m - a2 }) % m;
                rot + m * ((b1 + b2) % 2)
            }
            Component::Quaternion { m } => {
                let (a1, b1) = (a % m, a / m);
                let (a2, b2) = (b % m, b / m);
                let mut rot = (if b1 == 0 { a1 + a2 } else { a1 + m - a2 }) % m;
                let mut ys = b1 + b2;
                if ys == 2 {
                    rot = (rot + m / 2) % m;
                    ys = 0;
                }
                rot + m * ys
            }
            Component::Table(t) => t.mul[a * t.n + b] as usize,
        }
    }

    fn inverse(&self, a: usize) -> usize {
        match self {
            Component::Cyclic { n } => (n - a) % n,
            Component::Abelian { moduli } => {
                let mut x = a;
                let mut out = 0;
                let mut scale = 1;
                for &m in moduli.iter().rev() {
                    out += ((m - x % m) % m) * scale;
                    x /= m;
                    scale *= m;
                }
                out
            }
            Component::Dihedral { m } => {
                if a < *m {
                    (m - a) % m
                } else {
                    a
                }
            }
            Component::Quaternion { m } => {
                if a < *m {
                    (m - a) % m
                } else {
                    // (x^a y)^{-1} = x^a y * y^2 = x^{a + m/2} y
                    (a - m + m / 2) % m + m
                }
            }
            Component::Table(t) => t.inv[a] as usize,
        }
    }

    fn identity(&self) -> usize {
        match self {
            Component::Table(t) => t.identity,
            _ => 0,
        }
    }

    pub fn label(&self, a: usize) -> String {
        match self {
            Component::Cyclic { .. } => a.to_string(),
            Component::Abelian { moduli } => {
                let mut coords = vec![0; moduli.len()];
                let mut x = a;
                for (slot, &m) in coords.iter_mut().zip(moduli).rev() {
                    *slot = x % m;
                    x /= m;
                }
                let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
            Component::Dihedral { m } => word(a % m, a / m == 1, "r", "s"),
            Component::Quaternion { m } => word(a % m, a / m == 1, "x", "y"),
            Component::Table(_) => a.to_string(),
        }
    }
}

fn word(power: usize, reflect: bool, rot: &str, refl: &str) -> String {
    let mut s = match power {
        0 if !reflect => return "e".to_string(),
        0 => String::new(),
        1 => rot.to_string(),
        k => format!("{rot}^{k}"),
    };
    if reflect {
        s.push_str(refl);
    }
    s
}

#[derive(Debug)]
pub(crate) enum Law {
    Table(TableLaw),
    Product {
        components: Vec<Component>,
        strides: Vec<usize>,
    },
    /// Subgroup of `parent`, re-indexed densely.
    Embedded {
        parent: Arc<Law>,
        to_parent: Vec<u32>,
        from_parent: Vec<u32>,
    },
}

impl Law {
    pub fn product(components: Vec<Component>) -> Law {
        let mut strides = vec![1; components.len()];
        for i in (0..components.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * components[i + 1].order();
        }
        Law::Product {
            components,
            strides,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Law::Table(t) => t.mul[a * t.n + b] as usize,
            Law::Product {
                components,
                strides,
            } => {
                let mut out = 0;
                for (c, &s) in components.iter().zip(strides) {
                    let m = c.order();
                    out += c.mul(a / s % m, b / s % m) * s;
                }
                out
            }
            Law::Embedded {
                parent,
                to_parent,
                from_parent,
            } => {
                let p = parent.mul(to_parent[a] as usize, to_parent[b] as usize);
                from_parent[p] as usize
            }
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        match self {
            Law::Table(t) => t.inv[a] as usize,
            Law::Product {
                components,
                strides,
            } => components
                .iter()
                .zip(strides)
                .map(|(c, &s)| c.inverse(a / s % c.order()) * s)
                .sum(),
            Law::Embedded {
                parent,
                to_parent,
                from_parent,
            } => from_parent[parent.inverse(to_parent[a] as usize)] as usize,
        }
    }

    pub fn identity(&self) -> usize {
        match self {
            Law::Table(t) => t.identity,
            Law::Product {
                components,
                strides,
            } => components
                .iter()
                .zip(strides)
                .map(|(c, &s)| c.identity() * s)
                .sum(),
            Law::Embedded {
                parent,
                from_parent,
                ..
            } => from_parent[parent.identity()] as usize,
        }
    }
}
