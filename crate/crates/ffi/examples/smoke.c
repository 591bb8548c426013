#include <stdio.h>

#include "epgraph.h"

int main(void) {
    EpGroup *g = NULL;
    if (ep_group_new("Ab(3;1,1) x Q8", &g) != EP_STATUS_OK) {
        fprintf(stderr, "error: %s\n", ep_last_error_message());
        return 1;
    }
    uint64_t kappa = 0;
    char *report = NULL;
    if (ep_kappa_formula(g, &kappa) != EP_STATUS_OK
        || ep_kappa_report_json(g, EP_METHOD_BOTH, 600, &report) != EP_STATUS_OK) {
        fprintf(stderr, "error: %s\n", ep_last_error_message());
        ep_group_free(g);
        return 1;
    }
    printf("kappa = %llu\n%s\n", (unsigned long long)kappa, report);
    ep_string_free(report);
    ep_group_free(g);

    if (ep_group_new("Q12", &g) == EP_STATUS_PARSE) {
        printf("rejected: %s\n", ep_last_error_message());
    }
    return 0;
}
