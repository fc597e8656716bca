/*
 * Copyright 2026 The kappanet Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Checks that the public header compiles as C and the library links. */

#include <math.h>
#include <stdio.h>

#include "kappanet/kappanet.h"

int main(void) {
  kn_network* net = NULL;
  kn_degree degrees[2];
  size_t count = 0;
  int failed = 0;

  if (kn_chain_network(3, 0.2, KN_PROBABILITY, &net) != KN_OK) {
    fprintf(stderr, "chain: %s\n", kn_last_error());
    return 1;
  }
  if (kn_query(net, "X1=true", "X3", degrees, 2, &count) != KN_OK) {
    fprintf(stderr, "query: %s\n", kn_last_error());
    failed = 1;
  } else if (count != 2 || fabs(degrees[0].probability - 0.68) > 1e-12) {
    fprintf(stderr, "unexpected posterior %f\n", degrees[0].probability);
    failed = 1;
  }
  kn_network_free(net);
  return failed;
}
