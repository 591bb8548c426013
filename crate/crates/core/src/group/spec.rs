//! Algebraic group descriptions and their text syntax.
//!
//! A spec is a direct product of atoms written left to right and separated
//! by `x`, e.g. `Z5 x Ab(3;1,2) x Q8`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::number::{is_prime, prime_power_exponent};

/// One direct factor of a [`GroupSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    /// Cyclic group of order `n`.
    Cyclic(u64),
    /// Abelian p-group `Z_{p^t1} x ... x Z_{p^tk}` with `t1 <= ... <= tk`.
    AbelianP { p: u64, exponents: Vec<u32> },
    /// Dihedral group of the given order (`2m`, symmetries of an m-gon).
    Dihedral(u64),
    /// Generalized quaternion group of the given order `2^k`, `k >= 3`.
    Quaternion(u64),
    /// Group given by an explicit Cayley table file.
    Table(PathBuf),
}

impl Atom {
    pub fn validate(&self) -> Result<()> {
        match self {
            Atom::Cyclic(n) => {
                if *n == 0 {
                    return Err(Error::InvalidSpec("cyclic order must be at least 1".into()));
                }
            }
            Atom::AbelianP { p, exponents } => {
                if !is_prime(*p) {
                    return Err(Error::InvalidSpec(format!("{p} is not prime")));
                }
                if exponents.is_empty() {
                    return Err(Error::InvalidSpec(
                        "abelian p-group needs at least one exponent".into(),
                    ));
                }
                if exponents.contains(&0) {
                    return Err(Error::InvalidSpec("abelian exponents must be >= 1".into()));
                }
                if exponents.windows(2).any(|w| w[0] > w[1]) {
                    return Err(Error::InvalidSpec(format!(
                        "abelian exponents must be nondecreasing, got {exponents:?}"
                    )));
                }
            }
            Atom::Dihedral(order) => {
                if *order < 2 || order % 2 != 0 {
                    return Err(Error::InvalidSpec(format!(
                        "dihedral order must be even and >= 2, got {order}"
                    )));
                }
            }
            Atom::Quaternion(order) => match prime_power_exponent(*order, 2) {
                Some(k) if k >= 3 => {}
                _ => {
                    return Err(Error::InvalidSpec(format!(
                        "quaternion order must be a power of two >= 8, got {order}"
                    )))
                }
            },
            Atom::Table(_) => {}
        }
        Ok(())
    }

    /// Order of the atom, or `None` for table atoms (known only after loading).
    pub fn order(&self) -> Option<u128> {
        match self {
            Atom::Cyclic(n) | Atom::Dihedral(n) | Atom::Quaternion(n) => Some(*n as u128),
            Atom::AbelianP { p, exponents } => {
                let total: u32 = exponents.iter().sum();
                (*p as u128).checked_pow(total)
            }
            Atom::Table(_) => None,
        }
    }

    pub fn is_abelian_shape(&self) -> bool {
        matches!(self, Atom::Cyclic(_) | Atom::AbelianP { .. })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "Z{n}"),
            Atom::AbelianP { p, exponents } => {
                write!(f, "Ab({p};")?;
                for (i, t) in exponents.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str(")")
            }
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Quaternion(n) => write!(f, "Q{n}"),
            Atom::Table(path) => write!(f, "Table({})", path.display()),
        }
    }
}

/// Ordered list of atoms whose direct product is the described group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<Atom>,
}

impl GroupSpec {
    pub fn new(factors: Vec<Atom>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("spec has no factors".into()));
        }
        for atom in &factors {
            atom.validate()?;
        }
        Ok(GroupSpec { factors })
    }

    pub fn factors(&self) -> &[Atom] {
        &self.factors
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).parse_spec()
    }

    /// Order of the described group, if no table atoms are involved.
    pub fn order(&self) -> Option<u128> {
        self.factors
            .iter()
            .try_fold(1u128, |acc, a| acc.checked_mul(a.order()?))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => self.err(self.pos, format!("expected '{want}', found '{c}'")),
            None => self.err(self.pos, format!("expected '{want}', found end of input")),
        }
    }

    fn number(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected a number");
        }
        match self.src[start..self.pos].parse::<u64>() {
            Ok(v) => Ok((v, start)),
            Err(_) => self.err(start, "number out of range"),
        }
    }

    fn parse_spec(mut self) -> Result<GroupSpec> {
        let mut factors = Vec::new();
        loop {
            factors.push(self.parse_atom()?);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('x') => self.pos += 1,
                Some(c) => return self.err(self.pos, format!("expected 'x' separator, found '{c}'")),
            }
        }
        GroupSpec::new(factors).map_err(|e| match e {
            Error::InvalidSpec(m) => Error::Parse {
                offset: 0,
                message: m,
            },
            other => other,
        })
    }

    fn parse_atom(&mut self) -> Result<Atom> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let validated = |atom: Atom, offset: usize| -> Result<Atom> {
            atom.validate().map_err(|e| Error::Parse {
                offset,
                message: match e {
                    Error::InvalidSpec(m) => m,
                    other => other.to_string(),
                },
            })?;
            Ok(atom)
        };
        if rest.starts_with("Ab") {
            self.pos += 2;
            self.expect('(')?;
            let (p, p_at) = self.number()?;
            if !is_prime(p) {
                return self.err(p_at, format!("{p} is not prime"));
            }
            self.expect(';')?;
            let mut exponents = Vec::new();
            loop {
                let (t, t_at) = self.number()?;
                let t = u32::try_from(t).or_else(|_| self.err(t_at, "exponent out of range"))?;
                exponents.push(t);
                self.skip_ws();
                match self.peek() {
                    Some(',') => self.pos += 1,
                    _ => break,
                }
            }
            self.expect(')')?;
            validated(Atom::AbelianP { p, exponents }, start)
        } else if rest.starts_with("Table") {
            self.pos += 5;
            self.expect('(')?;
            let path_start = self.pos;
            let Some(len) = self.src[self.pos..].find(')') else {
                return self.err(path_start, "unterminated Table(...)");
            };
            let path = self.src[path_start..path_start + len].trim();
            if path.is_empty() {
                return self.err(path_start, "empty table path");
            }
            self.pos = path_start + len + 1;
            Ok(Atom::Table(PathBuf::from(path)))
        } else {
            match self.peek() {
                Some(c @ ('Z' | 'D' | 'Q')) => {
                    self.pos += 1;
                    let (n, _) = self.number()?;
                    let atom = match c {
                        'Z' => Atom::Cyclic(n),
                        'D' => Atom::Dihedral(n),
                        _ => Atom::Quaternion(n),
                    };
                    validated(atom, start)
                }
                Some(c) => self.err(start, format!("unknown token starting with '{c}'")),
                None => self.err(start, "expected a group atom, found end of input"),
            }
        }
    }
}
