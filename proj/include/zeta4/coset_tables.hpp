#ifndef ZETA4_COSET_TABLES_HPP
#define ZETA4_COSET_TABLES_HPP

#include <string>
#include <vector>

#include "zeta4/perm.hpp"

namespace zeta4 {

// One merged-subscript table: for the base tuple l' (say (l_{12},l_3,l_4)),
// each row lists a target tuple l together with every sigma in S4 that
// satisfies l = sigma . l'.  The rows partition S4.
struct CosetTableRow {
    SubscriptTuple target;
    PermList sigmas;
};

struct CosetTable {
    std::string name;
    SubscriptTuple base;
    std::vector<CosetTableRow> rows;
};

const std::vector<CosetTable>& coset_tables();

struct RowCheck {
    std::string table;
    std::string row;
    bool action_ok = false;   // every sigma maps base to the row target
    bool exact_ok = false;    // sigmas are exactly the solutions of sigma.base == target
};

struct TableReport {
    std::vector<RowCheck> rows;
    std::vector<std::string> partition_failures; // tables whose sigma multiset != S4
    bool all_ok() const;
};

// Checks both invariants on all six tables.
TableReport verify_table1();

struct CosetIdentityCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

// The signed-multiset coset identities and transversal facts used by the
// harmonic-lemma summations and the tuple-collection lemmas.
std::vector<CosetIdentityCheck> verify_coset_identities();

} // namespace zeta4

#endif
