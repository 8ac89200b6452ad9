//
// refmon - the classical-monoid dictionary and its correspondence checks.
//

#include "refmon/renner_data.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace refmon {

  std::vector<classical_family> const& classical_table() {
    static std::vector<classical_family> const table = {
        {renner_family::general_linear, "general linear M_n", "SL_n",
         coxeter_type::A, lattice_family::simplex_face,
         system_category::boolean_sys},
        {renner_family::orthogonal_odd, "special orthogonal MSO_{2l+1}",
         "SO_{2l+1}", coxeter_type::B, lattice_family::octa_face,
         system_category::octa_sys},
        {renner_family::symplectic, "symplectic MSp_{2l}", "Sp_{2l}",
         coxeter_type::B, lattice_family::octa_face,
         system_category::octa_sys},
        {renner_family::orthogonal_even, "special orthogonal MSO_{2l}",
         "SO_{2l}", coxeter_type::D, lattice_family::octa_face,
         system_category::octa_sys},
        {renner_family::solomon, "Solomon's example", "SL_n",
         coxeter_type::A, lattice_family::permutohedron,
         system_category::permutohedron_sys},
    };
    return table;
  }

  classical_family const& classical_row(renner_family name) {
    for (auto const& row : classical_table()) {
      if (row.name == name) {
        return row;
      }
    }
    throw std::invalid_argument("classical_row: bad family");
  }

  system_kind family_system(renner_family name, int param) {
    return renner_system(name, param);
  }

  lattice_kind family_polytope(renner_family name, int param) {
    auto const& row = classical_row(name);
    switch (row.polytope) {
      case lattice_family::simplex_face:
        if (param < 2) {
          throw std::invalid_argument("family_polytope: parameter");
        }
        return {lattice_family::simplex_face, param - 1};
      case lattice_family::octa_face:
        if (param < 1) {
          throw std::invalid_argument("family_polytope: parameter");
        }
        return {lattice_family::octa_face, param};
      case lattice_family::permutohedron:
        if (param < 2) {
          throw std::invalid_argument("family_polytope: parameter");
        }
        return {lattice_family::permutohedron, param - 1};
      default:
        throw std::invalid_argument("family_polytope: bad family");
    }
  }

  std::vector<int> eta_image(std::vector<int> const& J, int ell, bool odd) {
    std::vector<int> cols;
    int              shift = odd ? 2 * ell + 2 : 2 * ell + 1;
    for (int i : J) {
      if (i == 0 || i > ell || i < -ell) {
        throw std::invalid_argument("eta_image: index out of range");
      }
      cols.push_back(i > 0 ? i : shift + i);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
  }

  std::vector<int> theta_perm(signed_perm const& g, bool odd) {
    int              ell = g.n();
    int              n   = odd ? 2 * ell + 1 : 2 * ell;
    std::vector<int> img(n, 0);
    auto             eta = [&](int i) {
      return i > 0 ? i : (odd ? 2 * ell + 2 : 2 * ell + 1) + i;
    };
    for (int i = 1; i <= ell; ++i) {
      img[eta(i) - 1]  = eta(g.apply(i));
      img[eta(-i) - 1] = eta(-g.apply(i));
    }
    if (odd) {
      img[ell] = ell + 1;  // the middle column is fixed
    }
    return img;
  }

  std::vector<int> octa_zeta(lattice_kind const&    lat,
                             lattice_element const& x,
                             bool                   odd) {
    if (lat.family != lattice_family::octa_face) {
      throw std::invalid_argument("octa_zeta: not an octahedron lattice");
    }
    int ell = lat.param;
    if (x.extreme) {  // the whole polytope: the identity idempotent
      std::vector<int> all;
      for (int c = 1; c <= (odd ? 2 * ell + 1 : 2 * ell); ++c) {
        all.push_back(c);
      }
      return all;
    }
    auto cols = eta_image(x.data[0], ell, odd);
    if (odd) {
      cols.insert(std::lower_bound(cols.begin(), cols.end(), ell + 1),
                  ell + 1);
    }
    return cols;
  }

  namespace {

    bool contains(std::vector<int> const& big, std::vector<int> const& sub) {
      return std::includes(big.begin(), big.end(), sub.begin(), sub.end());
    }

  }  // namespace

  bool octa_zeta_isomorphism(int ell, bool odd) {
    lattice_kind lat{lattice_family::octa_face, ell};
    auto         elts = elements(lat);
    for (auto const& x : elts) {
      for (auto const& y : elts) {
        if (leq(lat, x, y)
            != contains(octa_zeta(lat, x, odd), octa_zeta(lat, y, odd))) {
          return false;
        }
      }
    }
    // injectivity across the whole lattice
    std::set<std::vector<int>> seen;
    for (auto const& x : elts) {
      if (!seen.insert(octa_zeta(lat, x, odd)).second) {
        return false;
      }
    }
    return true;
  }

  bool octa_zeta_equivariant(int ell, coxeter_type type, bool odd) {
    lattice_kind lat{lattice_family::octa_face, ell};
    auto         group = enumerate_group(type, ell);
    for (auto const& a : atoms(lat)) {
      auto za = octa_zeta(lat, a, odd);
      for (auto const& g : group.elements) {
        auto             th = theta_perm(g, odd);
        std::vector<int> mapped;
        for (int c : za) {
          mapped.push_back(th[c - 1]);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped != octa_zeta(lat, act(lat, a, g), odd)) {
          return false;
        }
      }
    }
    return true;
  }

  bool boolean_simplex_isomorphic(int n) {
    lattice_kind b{lattice_family::boolean, n};
    lattice_kind s{lattice_family::simplex_face, n - 1};
    auto         be = elements(b);
    auto         se = elements(s);
    if (be.size() != se.size()) {
      return false;
    }
    std::sort(be.begin(), be.end());
    std::sort(se.begin(), se.end());
    if (!(be == se)) {
      return false;
    }
    for (auto const& x : be) {
      for (auto const& y : be) {
        if (leq(b, x, y) != leq(s, x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  solomon_report solomon_vertex_check(int n) {
    if (n < 2 || n > 5) {
      throw std::invalid_argument("solomon_vertex_check: need 2 <= n <= 5");
    }
    solomon_report report;

    // all subsets of {1..n} of each size 1..n-1
    std::vector<std::vector<std::vector<int>>> by_size(n);
    for (int mask = 1; mask < (1 << n); ++mask) {
      int k = __builtin_popcount(mask);
      if (k == n) {
        continue;
      }
      std::vector<int> J;
      for (int j = 1; j <= n; ++j) {
        if (mask & (1 << (j - 1))) {
          J.push_back(j);
        }
      }
      by_size[k].push_back(J);
    }

    int bound_total = 0;  // (n-1) + ... + (n-k) prefix bounds
    std::vector<int> bound(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
      bound_total += n - k;
      bound[k] = bound_total;
    }

    std::set<std::vector<int>> realized;
    bool                       ineq_ok = true;
    std::vector<int>           pick(n - 1, 0);
    while (true) {
      std::vector<int> a(n, 0);
      for (int i = 1; i <= n - 1; ++i) {
        for (int j : by_size[i][pick[i - 1]]) {
          ++a[j - 1];
        }
      }
      ++report.sigma_size;
      realized.insert(a);
      // the prefix bounds over every coordinate ordering reduce to the
      // descending sort
      auto sorted = a;
      std::sort(sorted.rbegin(), sorted.rend());
      int prefix = 0;
      for (int k = 1; k <= n; ++k) {
        prefix += sorted[k - 1];
        if (prefix > bound[k]) {
          ineq_ok = false;
        }
      }
      int i = n - 2;
      while (i >= 0
             && pick[i] + 1 == static_cast<int>(by_size[i + 1].size())) {
        pick[i--] = 0;
      }
      if (i < 0) {
        break;
      }
      ++pick[i];
    }
    report.inequalities_ok = ineq_ok;

    // the complemented nested tuple J_i = {i+1..n} gives (0, 1, ..., n-1)
    std::vector<int> base(n, 0);
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        ++base[j - 1];
      }
    }
    std::vector<int> want(n);
    for (int j = 0; j < n; ++j) {
      want[j] = j;
    }
    report.base_vertex_ok = base == want;

    // the realized extreme points (prefix bounds tight at k = n and the
    // sorted vector equal to (n-1, ..., 0)) are exactly the permutations
    // of (0..n-1)
    std::set<std::vector<int>> perms;
    std::vector<int>           perm = want;
    do {
      perms.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    bool orbit_ok = true;
    for (auto const& v : perms) {
      if (!realized.count(v)) {
        orbit_ok = false;
      }
    }
    for (auto const& v : realized) {
      auto sorted = v;
      std::sort(sorted.rbegin(), sorted.rend());
      bool extreme = true;
      for (int k = 1; k <= n; ++k) {
        if (sorted[k - 1] != n - k) {
          extreme = false;
          break;
        }
      }
      if (extreme && !perms.count(v)) {
        orbit_ok = false;
      }
    }
    report.vertex_orbit_ok = orbit_ok;
    return report;
  }

}  // namespace refmon
