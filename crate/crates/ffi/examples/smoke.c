/* Build: cargo build -p twinid-ffi
 *        cc crates/ffi/examples/smoke.c -Icrates/ffi/include \
 *           target/debug/libtwinid_ffi.a -lpthread -ldl -lm -o smoke */
#include <stdio.h>
#include "twinid.h"

int main(void) {
    TwinidGraph *g = NULL;
    if (twinid_gen_hp(3, &g) != TWINID_STATUS_OK) {
        fprintf(stderr, "gen failed: %s\n", twinid_last_error_message());
        return 1;
    }
    size_t n = twinid_graph_vertex_count(g);
    uint32_t colors[7];
    size_t chi_id = 0, chi_lid = 0;
    twinid_solve(g, TWINID_VARIANT_ID, false, &chi_id, colors);
    twinid_solve(g, TWINID_VARIANT_LID, false, &chi_lid, NULL);
    bool valid = false;
    twinid_check_coloring(g, TWINID_VARIANT_ID, colors, n, &valid);
    printf("H_3: n=%zu chi_id=%zu chi_lid=%zu witness_valid=%d\n", n, chi_id, chi_lid, valid);

    TwinidGraph *bad = NULL;
    TwinidStatus st = twinid_graph_parse("3 1\n0 3\n", &bad);
    printf("parse status=%d message=%s\n", (int)st, twinid_last_error_message());

    char *json = NULL;
    TwinidGraph *h = NULL;
    twinid_gen_htt(2, 2, 1, &h);
    twinid_verify_bounds_json(h, TWINID_VARIANT_LID, false, &json);
    printf("%s\n", json);
    twinid_string_free(json);
    twinid_graph_free(h);
    twinid_graph_free(g);
    return 0;
}
