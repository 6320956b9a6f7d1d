/* Copyright 2026 The triplewalk Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include <stdio.h>

#include "triplewalk/triplewalk.h"

int main(void) {
    tw_spec spec = {11, 1, 5, 10.0};
    tw_model* model = NULL;
    tw_trace* trace = NULL;
    tw_verdict verdict;
    int rc = 1;

    if (tw_model_create(&spec, &model) != TW_OK) {
        fprintf(stderr, "%s\n", tw_last_error());
        return 1;
    }
    if (tw_trace_create(model, 3, 100.0, 0.05, &trace) == TW_OK &&
        tw_detect_switching(trace, TW_SIDE_LEFT, 0.05, &verdict) == TW_OK) {
        printf("switching=%d max_opposite=%.4f\n", verdict.switching, verdict.max_opposite);
        rc = verdict.switching ? 0 : 1;
    }
    tw_trace_destroy(trace);
    tw_model_destroy(model);
    return rc;
}
