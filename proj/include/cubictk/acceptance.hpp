#pragma once
// the release gate: twelve end to end checks over the whole pipeline, each
// printing a single [PASS]/[FAIL] line with its wall time.

namespace ctk {

// runs every criterion when which = 0, otherwise just the requested one;
// returns the number of failures
int run_acceptance(int which = 0);

}  // namespace ctk
