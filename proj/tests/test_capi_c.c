/* Compiled as C to check that the public header is plain C. */
#include <stdio.h>
#include <string.h>

#include "tstar/tstar.h"

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                   \
    }                                                             \
  } while (0)

int main(void) {
  const double x[] = {1, 2, 3, 4, 5};
  const double y[] = {1, 2, 3, 4, 5};
  tstar_sample* sample = NULL;
  tstar_result* result = NULL;
  int64_t num = 0;
  int64_t den = 0;

  EXPECT(tstar_sample_create(x, y, 5, &sample) == TSTAR_OK);
  EXPECT(tstar_compute(sample, TSTAR_KIND_U, TSTAR_METHOD_AUTO, &result) == TSTAR_OK);
  EXPECT(tstar_result_path(result) == TSTAR_PATH_UNTIED);
  EXPECT(tstar_result_field_i64(result, TSTAR_FIELD_NUMERATOR, &num) == TSTAR_OK);
  EXPECT(tstar_result_field_i64(result, TSTAR_FIELD_DENOMINATOR, &den) == TSTAR_OK);
  EXPECT(num == 80 && den == 120);
  EXPECT(strcmp(tstar_kind_name(tstar_result_kind(result)), "U") == 0);

  tstar_result_destroy(result);
  tstar_sample_destroy(sample);
  puts("c api ok");
  return 0;
}
