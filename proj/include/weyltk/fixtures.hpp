#pragma once

#include <string>
#include <vector>

namespace weyltk {

/// One row of the shipped tables for the exceptional types: the minimal
/// class length, the class named by its characteristic polynomial, the
/// attached representation label (carried as data), and the node subsets
/// with their multiplicities.
struct FixtureRow {
    long d = 0;
    std::string class_label;
    std::string chi;
    std::vector<std::pair<std::vector<int>, long>> subsets;
};

struct FixtureTable {
    std::string type;
    std::vector<FixtureRow> rows;
};

std::vector<FixtureTable> load_fixture_tables(const std::string& path);
/// The shipped file (data/exceptional_tables.json next to the working
/// directory, or the compile-time default).
std::string default_fixture_path();

struct FixtureRowResult {
    FixtureRow row;
    bool dims_ok = false;    // every listed K has dim G_K == d
    bool label_ok = false;   // cyclotomic label: degree == rank, no Phi1
    std::vector<long> dims;  // computed dim G_K per subset
    std::string detail;
};

struct FixtureReport {
    std::string type;
    std::vector<FixtureRowResult> rows;
    bool all_pass() const;
};

FixtureReport check_table_fixture(const std::string& type, const std::string& path = "");

} // namespace weyltk
