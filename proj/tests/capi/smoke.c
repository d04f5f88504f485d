/* Copyright 2026 The gds Authors
   SPDX-License-Identifier: Apache-2.0 */

/* Plain C consumer of the public header. */

#include <math.h>
#include <stdio.h>

#include "gds/gds.h"

static int failures = 0;

#define EXPECT(cond)                                        \
  do {                                                      \
    if (!(cond)) {                                          \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                           \
    }                                                       \
  } while (0)

int main(void) {
  gds_series* z = NULL;
  gds_value v;
  gds_complex s2 = {2.0, 0.0};
  gds_complex s1 = {1.0, 0.0};
  gds_law law;
  gds_condition c;
  double x[3] = {1.0, 2.0, 3.0};
  gds_match_result m;

  EXPECT(gds_series_zeta(&z) == GDS_OK);
  EXPECT(gds_evaluate(z, s2, 1e-12, &v) == GDS_OK);
  EXPECT(fabs(v.value.re - 1.6449340668482264) < 1e-11);

  EXPECT(gds_evaluate(z, s1, 1e-12, &v) == GDS_ERR_POLE);
  EXPECT(gds_last_error()[0] != '\0');
  EXPECT(gds_evaluate(NULL, s2, 1e-12, &v) == GDS_ERR_NULL_ARGUMENT);

  EXPECT(gds_asymptotic_constants(z, 1, 1e-12, &law) == GDS_OK);
  EXPECT(fabs(law.m - 3.141592653589793) < 1e-12);
  EXPECT(gds_match(z, &law, x, 3, &m) == GDS_OK);
  EXPECT(m.best == GDS_SHAPE_SINH_OVER_LINEAR && m.matched);

  EXPECT(gds_main_condition(law.alpha, law.rho, 1, &c) == GDS_OK);
  EXPECT(c.holds == 1);

  gds_series_free(z);
  gds_series_free(NULL);

  if (failures == 0) printf("c smoke: ok (%s)\n", gds_version());
  return failures == 0 ? 0 : 1;
}
