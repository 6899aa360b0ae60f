#pragma once

#include <slporbit/laurent.hpp>
#include <slporbit/roots.hpp>
#include <slporbit/slp.hpp>

#include <string>
#include <vector>

namespace slporbit {

// Case tags of the codimension-1 boundary construction.  FN and LN never
// contribute (their candidates are dominated) and appear only in exclusion
// tests; M2I/M3II/M3III name the three moves of the nested pair+mixed
// configuration, which coincide with LS/CMPa2/CMPb applied there.
enum class BoundaryCase {
    FC,
    FPa,
    FPb,
    FMa,
    FMb,
    FN,
    LS,
    LC,
    LP,
    LMa,
    LMb,
    LN,
    CS,
    CCP,
    CCM,
    CPP,
    CMC,
    CMPa1,
    CMPa2,
    CMPb,
    CMMa1,
    CMMa2,
    CMMb,
    M2I,
    M3II,
    M3III,
};
std::string to_string(BoundaryCase c);

// One factor of a limit curve B_m: a torus generator with a Laurent-monomial
// parameter or a unipotent generator with a constant (or monomial) parameter.
struct WitnessFactor {
    bool is_torus;
    int torus_index = 0;
    RootId root = RootId::two_e(1);
    Laurent coeff;

    static WitnessFactor torus(int i, Laurent c) { return {true, i, RootId::two_e(1), std::move(c)}; }
    static WitnessFactor unipotent(RootId r, Laurent c) { return {false, 0, r, std::move(c)}; }
};

struct BoundaryWitness {
    std::vector<WitnessFactor> factors;  // product order, leftmost first
};

// B_m as a matrix over Gaussian-rational Laurent polynomials.
Matrix<Laurent> witness_matrix(const BoundaryWitness& w, int n);

// True iff B_m X_L B_m^{-1} has no positive powers of m and its constant part
// equals X_{L'}.  Throws for invalid factors (degenerate torus coefficient).
bool verify_witness(const SymmetricLinkPattern& from, const SymmetricLinkPattern& to,
                    const BoundaryWitness& w);

struct NBoundaryEntry {
    SymmetricLinkPattern pattern;
    BoundaryWitness witness;
    ArcClass source;  // the external arc class that was removed
};

// N(L): one fewer-arc minimal degeneration per external arc class.
std::vector<NBoundaryEntry> n_of(const SymmetricLinkPattern& l);
// The members of N(L) whose orbit dimension drops by exactly 1.
std::vector<NBoundaryEntry> n_codim1(const SymmetricLinkPattern& l);

struct DBoundaryEntry {
    SymmetricLinkPattern pattern;
    BoundaryWitness witness;
    BoundaryCase tag;
};

// D(L): same-arc-count codimension-1 degenerations with their limit curves.
// Entries are filtered by (strictly below L, same arc count, dimension drop
// exactly 1); several moves may produce the same pattern, and such entries
// are all kept, so treat the pattern multiset as a set.
std::vector<DBoundaryEntry> d_of(const SymmetricLinkPattern& l);

// C(L) = D(L) union (N(L) of codimension 1), patterns deduplicated.
std::vector<SymmetricLinkPattern> c_of(const SymmetricLinkPattern& l);

std::string boundary_report_json(const SymmetricLinkPattern& l);

}  // namespace slporbit
