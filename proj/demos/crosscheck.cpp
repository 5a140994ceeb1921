// Evaluate a few closed forms exactly, then recompute the same sums by brute
// force at 60 digits and report the agreement.

#include <cstdio>

#include "trigsum/oracle.hpp"
#include "trigsum/sums.hpp"

using namespace trigsum;

static void show(const char* label, const Rational& exact, const BigFloat& numeric,
                 unsigned long D) {
    auto res = check_exact_vs_numeric(exact, numeric, D);
    std::printf("%-34s exact = %s\n", label, exact.str().c_str());
    std::printf("%-34s        = %s...\n", "", res.exact_decimal.substr(0, 40).c_str());
    std::printf("%-34s direct = %s...\n", "", res.numeric_decimal.substr(0, 40).c_str());
    std::printf("%-34s rel diff %s -> %s\n\n", "", res.rel_diff.c_str(),
                res.pass ? "ok" : "MISMATCH");
}

int main() {
    const unsigned long D = 60;

    show("sum csc^6(k pi/14), k<7", cc_sum(7, 0, 3, 2),
         raw_trig_sum(7, 3, 0, 2, RawKind::csc_only, D), D);
    show("sum cot^10 csc^8(k pi/9), k<9", cc_sum(9, 5, 4, 1),
         raw_trig_sum(9, 5, 4, 1, RawKind::cc, D), D);
    show("sum tan^4 sec^6(k pi/10), k<10", ts_sum(10, 2, 3),
         raw_trig_sum(10, 2, 3, 1, RawKind::ts, D), D);

    PiScaled s = gardner_fisher(3, 2);
    std::printf("sum over half angles, m=3, v=2:  S = %s = %s...\n", s.str().c_str(),
                eval_pi_scaled(s, 30).to_string(25).c_str());
    return 0;
}
