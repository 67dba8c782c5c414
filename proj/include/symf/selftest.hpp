#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace symf::selftest {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Parameter ranges for the oracle-equivalence checks.
struct Bounds {
    int cauchy_pairs = 50;
    int cauchy_max_total = 12;  // r * deg F
    int perm_max_n = 4;
    int perm_max_r = 6;
    int theorem_perm_max_n = 3;
    int theorem_perm_max_total = 6;  // r * deg P
    int sl2_max_k = 3;
    int sl2_max_r = 4;
    int catalan_max_m = 6;
    int sp_max_q = 5;
    int gl_max_r = 8;
    int hilbert_max_k = 6;
    int hilbert_max_r = 6;
    int deals_max_mn = 12;
    int regular_max_n = 5;
    int regular_max_k = 4;
    std::uint32_t seed = 20261015;

    static Bounds full() { return {}; }
    /// Every range shrunk so that no computation exceeds roughly `max_degree`.
    static Bounds reduced(int max_degree);
};

CheckResult plethysm_identities();
CheckResult cauchy_mode_agreement(int pairs, int max_total, std::uint32_t seed);
CheckResult permutation_family(int max_n, int max_r);
CheckResult theorem_permutation(int max_n, int max_total);
CheckResult theorem_sl2(int max_k, int max_r);
CheckResult catalan_dimensions(int max_m);
CheckResult symplectic_stable(int max_q);
CheckResult gl_adjoint_identity(int max_r);
CheckResult hilbert_binary_forms(int max_k, int max_r);
CheckResult card_deals(int max_mn);
CheckResult regular_multigraphs(int max_n, int max_k);

/// Runs the eleven checks above in order, reporting each as it finishes.
std::vector<CheckResult> run_all(const Bounds& bounds,
                                 const std::function<void(const CheckResult&)>& on_result = {});

} // namespace symf::selftest
