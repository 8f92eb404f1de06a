#include <stdio.h>
#include <string.h>
#include "quintic_gw.h"

static int expect(const char *got, const char *want) {
    if (strcmp(got, want) != 0) {
        fprintf(stderr, "got %s, want %s\n", got, want);
        return 1;
    }
    return 0;
}

int main(void) {
    int bad = 0;
    char *s = NULL;

    if (qgw_n_g0(2, -200, &s) != QGW_STATUS_OK) return 2;
    bad |= expect(s, "-5/144");
    qgw_string_free(s);

    QgwSolution *sol = NULL;
    if (qgw_solve_crho(2, 1, "[[3,0],[1,0]]", &sol) != QGW_STATUS_OK) return 2;
    bad |= qgw_solution_len(sol) != 4;
    qgw_solution_free(sol);

    if (qgw_c_master(7, 1, &s) == QGW_STATUS_OK) return 2;
    char *msg = qgw_last_error();
    bad |= msg == NULL;
    qgw_string_free(msg);

    printf("ok\n");
    return bad;
}
