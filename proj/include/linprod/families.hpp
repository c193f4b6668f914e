#pragma once

#include "linprod/idealops.hpp"
#include "linprod/monideal.hpp"

namespace linprod {

// ---- ideals of linear forms ----

// Subspace of linear forms in canonical reduced row-echelon form.
class LinearIdeal {
public:
    LinearIdeal() = default;
    LinearIdeal(RingPtr ring, const std::vector<Polynomial>& forms);
    static LinearIdeal from_rows(RingPtr ring, std::vector<std::vector<Coeff>> rows);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Coeff>>& rows() const { return rows_; }
    std::vector<Polynomial> forms() const;
    PolyIdeal to_poly_ideal() const;
    // products of k basis forms
    PolyIdeal power_ideal(int k) const;

    bool contains(const LinearIdeal& other) const;
    LinearIdeal sum(const LinearIdeal& other) const;
    bool operator==(const LinearIdeal& o) const { return rows_ == o.rows_; }
    bool operator!=(const LinearIdeal& o) const { return !(*this == o); }
    bool operator<(const LinearIdeal& o) const;  // for containers

private:
    RingPtr ring_;
    std::vector<std::vector<Coeff>> rows_;
};

PolyIdeal linforms_product(const std::vector<LinearIdeal>& ps);

// max k with I contained in P^k (= P-adic valuation; powers of a linear
// prime are primary), searched up to `kmax`
int linforms_vp(const PolyIdeal& product, const LinearIdeal& p, int kmax,
                const GBOptions& opts = {});

struct LinformsComponent {
    LinearIdeal prime;
    int exponent;
    std::vector<int> index_set;  // the A realizing P_A (first found)
};

struct LinformsDecomposition {
    std::vector<LinformsComponent> components;  // exponent > 0 only
    bool equals_product = false;
};

LinformsDecomposition linforms_decompose(const std::vector<LinearIdeal>& ps,
                                         const GBOptions& opts = {});

struct PGraph {
    std::vector<int> vertices;                 // factor indices with P_i <= P
    std::vector<std::pair<int, int>> edges;    // intersection contains a linear form
    bool connected() const;
};

PGraph gp_graph(const std::vector<LinearIdeal>& ps, const LinearIdeal& p);

// Associated-prime decision by localization: keep the factors inside P,
// change coordinates so P becomes an initial segment of variables, and
// test (I' : m') != I'.
bool linforms_is_associated(const std::vector<LinearIdeal>& ps, const LinearIdeal& p,
                            const GBOptions& opts = {});

// Constructive cross-check of the connected case: the spanning-tree product
// F of shared linear forms has I : F = P after localization.  nullopt when
// the construction does not apply (graph disconnected, or P not the sum of
// the kept factors).
std::optional<bool> linforms_witness_check(const std::vector<LinearIdeal>& ps,
                                           const LinearIdeal& p, const GBOptions& opts = {});

struct GpTestReport {
    bool gp_connected = false;
    bool split_criterion = false;  // a disconnecting split with no shared form exists
    bool is_associated = false;
    bool consistent = true;  // criteria, when they fire, agree with is_associated
};

GpTestReport gp_tests(const std::vector<LinearIdeal>& ps, const LinearIdeal& p,
                      const GBOptions& opts = {});

// ---- polymatroidal ideals ----

// P-adic valuation as the "local" regularity: regularity of the ideal with
// the variables outside P set to 1.
int polymatroid_vp(const MonomialIdeal& ideal, const MonomialPrime& p);

struct PolymatroidComponent {
    MonomialPrime prime;
    int exponent;
};

struct PolymatroidDecomposition {
    std::vector<PolymatroidComponent> components;      // v_P > 0
    std::vector<PolymatroidComponent> irredundant;     // after removal testing
    bool equals_ideal = false;
};

PolymatroidDecomposition polymatroid_decompose(const MonomialIdeal& ideal);

struct AssChain {
    std::vector<std::vector<MonomialPrime>> ass_per_power;  // k = 1..kmax
    bool chain_inclusions = false;  // Ass(R/I^k) subset of Ass(R/I^{k+1})
    bool constant = false;          // equality across all k
};

AssChain polymatroid_ass_chain(const MonomialIdeal& ideal, int kmax = 4);

// ---- northeast determinantal ideals ----

struct NortheastSpec {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // (t_i, a_i), 1-based, t+a <= n+1

    void validate() const;
    RingPtr matrix_ring(FieldSpec field = {}) const { return Ring::matrix(n, n, field); }
};

// t-minors of the rows 1..t, columns a..n block
PolyIdeal ne_minor_ideal(const RingPtr& ring, int t, int a);
// their diagonal initial monomials
MonomialIdeal ne_diagonal_ideal(const RingPtr& ring, int t, int a);

int ne_exponent(const NortheastSpec& spec, int u, int b);

struct NeDecomposition {
    std::map<std::pair<int, int>, int> exponents;  // (u, b) -> e > 0
    bool minor_side_equal = false;
    bool diagonal_side_equal = false;
};

NeDecomposition ne_decompose(const NortheastSpec& spec, const GBOptions& opts = {});

struct NeIrredundant {
    std::vector<std::pair<int, int>> extra;  // the refinement set Y
    bool proviso = false;                    // all witnesses can satisfy u+b <= n+1
    bool equals_ideal = false;
    bool irredundant = false;
    // primes of the surviving components: Ass(R/I_S) when irredundant
    std::vector<std::pair<int, int>> associated;
};

NeIrredundant ne_irredundant(const NortheastSpec& spec, const GBOptions& opts = {});

struct NeJPower {
    std::vector<MonomialPrime> facets;
    bool equal = false;  // J_u(b)^k == intersection of facet-prime k-th powers
};

NeJPower ne_jpower_decompose(int u, int b, int k, int n);

}  // namespace linprod
