#include <stdio.h>
#include <string.h>
#include "hurwitz_ga.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (line %d): %s\n", #cond, __LINE__, hg_last_error_message()); return 1; } } while (0)

int main(void) {
    HgMultivector *x = NULL, *y = NULL, *p = NULL;
    CHECK(hg_multivector_parse(3, 0, "e1 + e2", &x) == HG_STATUS_OK);
    CHECK(hg_multivector_parse(3, 0, "e1 - e2", &y) == HG_STATUS_OK);
    CHECK(hg_geometric_product(x, y, &p) == HG_STATUS_OK);

    char *s = NULL;
    CHECK(hg_multivector_to_string(p, &s) == HG_STATUS_OK);
    CHECK(strcmp(s, "-2*e12") == 0);
    hg_string_free(s);

    CHECK(hg_octonion_norm(x, HG_VARIANT_PLUS, &s) == HG_STATUS_OK);
    CHECK(strcmp(s, "2") == 0);
    hg_string_free(s);

    HgClass cls;
    CHECK(hg_classify(0, 3, HG_VARIANT_MINUS, &cls) == HG_STATUS_OK);
    CHECK(cls == HG_CLASS_O);
    CHECK(hg_classify(2, 2, HG_VARIANT_MINUS, &cls) == HG_STATUS_INVALID_ARGUMENT);
    CHECK(strlen(hg_last_error_message()) > 0);

    HgTable *o = NULL, *os = NULL, *b = NULL;
    CHECK(hg_table_build("O", &o) == HG_STATUS_OK);
    CHECK(hg_table_build("Os", &os) == HG_STATUS_OK);
    CHECK(hg_table_build("bullet:3,0:+", &b) == HG_STATUS_OK);
    size_t k; int8_t sign;
    CHECK(hg_table_entry(o, 1, 2, &k, &sign) == HG_STATUS_OK);
    CHECK(k == 4 && sign == 1);
    CHECK(hg_find_isomorphism(b, o, &s) == HG_STATUS_OK);
    CHECK(strstr(s, "\"map\"") != NULL);
    hg_string_free(s);
    CHECK(hg_find_isomorphism(o, os, &s) == HG_STATUS_NOT_FOUND);
    CHECK(s == NULL);

    hg_table_free(o);
    hg_table_free(os);
    hg_table_free(b);
    hg_multivector_free(x);
    hg_multivector_free(y);
    hg_multivector_free(p);
    printf("ok %s\n", hg_version());
    return 0;
}
