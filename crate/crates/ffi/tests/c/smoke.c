#include <stdio.h>
#include <string.h>

#include "sectorpack.h"

int main(void) {
    SpPoly *p = NULL;
    SpSector *s = NULL;
    SpVerifyResult r;
    char msg[128];

    if (sp_poly_parse("1 1 1 1 2 0", &p) != SP_STATUS_OK) return 10;
    if (sp_sector_parse("inf", &s) != SP_STATUS_OK) return 11;
    if (sp_verify_prefix(p, s, 500, &r) != SP_STATUS_OK) return 12;
    if (r.kind != SP_VERIFY_KIND_VERIFIED || r.verified_up_to != 500) return 13;

    if (sp_poly_parse("not a polynomial", &p) != SP_STATUS_PARSE) return 14;
    if (sp_last_error_message(msg, sizeof msg) == 0) return 15;

    sp_poly_free(p);
    sp_sector_free(s);
    printf("ok\n");
    return 0;
}
