#pragma once

#include <map>
#include <vector>

#include "vscgw/blocks.hpp"

namespace vscgw {

// N: ambient dimension + 1, k: hypersurface degree, d: curve degree,
// n: grading index.  The constant vanishes outside 0 <= n <= N-1-(N-k)d.
struct VscKey {
    unsigned N = 0;
    unsigned k = 1;
    unsigned d = 1;
    long n = 0;
    friend auto operator<=>(const VscKey&, const VscKey&) = default;
};

long vsc_window_max(unsigned N, unsigned k, unsigned d);

struct VscEntry {
    Rational value;
    bool from_recursion = false;
    bool from_residue = false;
};

// Store-once table: re-storing a key must agree in value (provenance flags
// merge); a conflict is a build error, not a tolerance issue.  Degree-1
// constants are N-independent and live under a sentinel N = 0.
class VscTable {
  public:
    static VscKey storage_key(VscKey key);
    void store(const VscKey& key, const Rational& value, bool recursion, bool residue);
    const VscEntry* find(const VscKey& key) const;
    const std::map<VscKey, VscEntry>& entries() const { return entries_; }

  private:
    std::map<VscKey, VscEntry> entries_;
};

// coefficients of k prod_{j=1}^{k-1} (j w + (k-j)) in w, index 0..k-1
std::vector<Rational> vsc_initial_row(unsigned k);

// Definition-1 pipeline: the degree recursion, memoized into table.
// Subscript shifts reference the left-side N; right-side constants carry N+1.
Rational vsc_recursive(const VscKey& key, VscTable& table);

// Iterated-residue pipeline: one integrand per ordered partition of d,
// residues taken innermost x_0, ascending subscript.
Rational vsc_residue(const VscKey& key);

// Fills every in-window entry for d <= d_max via the recursion; with
// verify_residue the residue pipeline is stored alongside and must agree.
VscTable vsc_table(unsigned N, unsigned k, unsigned d_max, bool verify_residue = false);

}  // namespace vscgw
