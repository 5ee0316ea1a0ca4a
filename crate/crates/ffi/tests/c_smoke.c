#include <stdio.h>
#include <string.h>
#include "hadlab.h"

static int fail(const char *what) {
    const char *msg = hl_last_error_message();
    fprintf(stderr, "%s: %s\n", what, msg ? msg : "(no message)");
    return 1;
}

int main(void) {
    HlGraph *g = NULL;
    /* complement of C7 */
    if (hl_graph_from_graph6("FUzro", &g) != HL_STATUS_OK) return fail("parse");
    size_t chi = 0, omega = 0;
    if (hl_chromatic_number(g, &chi) != HL_STATUS_OK) return fail("chi");
    if (hl_clique_number(g, &omega) != HL_STATUS_OK) return fail("omega");
    char *cert = NULL;
    if (hl_construct_model(g, HL_MODEL_MODE_SMALL, &cert) != HL_STATUS_OK) return fail("model");
    bool ok = false;
    if (hl_recheck_certificate_json(cert, &ok) != HL_STATUS_OK || !ok) return fail("recheck");
    hl_string_free(cert);
    hl_graph_free(g);
    if (hl_graph_from_graph6("F~~", &g) != HL_STATUS_MALFORMED) return fail("malformed accepted");
    if (hl_last_error_message() == NULL) return 1;
    printf("n=7 chi=%zu omega=%zu\n", chi, omega);
    return 0;
}
