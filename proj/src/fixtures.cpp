#include "weyltk/fixtures.hpp"

#include "weyltk/qpoly.hpp"
#include "weyltk/rootsys.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace weyltk {

namespace {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace

std::string default_fixture_path() {
#ifdef WEYLTK_DATA_DIR
    return std::string(WEYLTK_DATA_DIR) + "/exceptional_tables.json";
#else
    return "data/exceptional_tables.json";
#endif
}

std::vector<FixtureTable> load_fixture_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixtures: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("fixtures: parse failure in " + path + ": " + e.what());
    }
    std::vector<FixtureTable> out;
    for (const auto& jt : j.at("tables")) {
        FixtureTable t;
        t.type = jt.at("type").get<std::string>();
        for (const auto& jr : jt.at("rows")) {
            FixtureRow r;
            r.d = jr.at("d").get<long>();
            r.class_label = jr.at("class").get<std::string>();
            r.chi = jr.at("chi").get<std::string>();
            for (const auto& js : jr.at("subsets"))
                r.subsets.emplace_back(js.at("K").get<std::vector<int>>(),
                                       js.at("m").get<long>());
            t.rows.push_back(std::move(r));
        }
        out.push_back(std::move(t));
    }
    return out;
}

bool FixtureReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.dims_ok || !r.label_ok) return false;
    return true;
}

FixtureReport check_table_fixture(const std::string& type, const std::string& path) {
    auto tables = load_fixture_tables(path.empty() ? default_fixture_path() : path);
    const FixtureTable* table = nullptr;
    for (const auto& t : tables)
        if (t.type == type) table = &t;
    if (!table) throw std::invalid_argument("fixtures: no table for type " + type);

    const RootSystemData& rd = root_data(type);
    FixtureReport rep;
    rep.type = type;
    for (const auto& row : table->rows) {
        FixtureRowResult res;
        res.row = row;

        std::string suffix;
        auto fac = parse_cyclotomic_string(row.class_label, &suffix);
        long deg = 0;
        for (const auto& [d, k] : fac) deg += static_cast<long>(euler_phi(d)) * k;
        res.label_ok = deg == rd.rank && fac.find(1) == fac.end();

        res.dims_ok = true;
        std::ostringstream os;
        for (const auto& [nodes, mult] : row.subsets) {
            (void)mult;
            SubsystemData sd = subsystem_for(rd, nodes);
            res.dims.push_back(sd.dim_gk);
            if (sd.dim_gk != row.d) res.dims_ok = false;
            os << "[" << sd.node_string() << "] dim " << sd.dim_gk << " ";
        }
        res.detail = os.str();
        rep.rows.push_back(std::move(res));
    }
    return rep;
}

} // namespace weyltk
