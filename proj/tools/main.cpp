// weyltk command-line interface: enumeration, label computation, and the
// verification sweeps, with text/csv/json output.

#include "weyltk/bruteforce.hpp"
#include "weyltk/fixtures.hpp"
#include "weyltk/isometry.hpp"
#include "weyltk/partition.hpp"
#include "weyltk/pipeline.hpp"
#include "weyltk/representations.hpp"
#include "weyltk/rootsys.hpp"
#include "weyltk/springer.hpp"
#include "weyltk/vandermonde.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace weyltk;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct OutputRecord {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::string format = "text";

    void emit(std::ostream& os) const {
        if (format == "json") {
            json j;
            j["command"] = command;
            j["columns"] = columns;
            json rws = json::array();
            for (const auto& r : rows) {
                json row = json::object();
                for (size_t i = 0; i < columns.size(); ++i) {
                    // structured cells (labels, coefficient lists) embed as JSON
                    if (!r[i].empty() && (r[i][0] == '[' || r[i][0] == '{')) {
                        json parsed = json::parse(r[i], nullptr, false);
                        if (!parsed.is_discarded()) {
                            row[columns[i]] = parsed;
                            continue;
                        }
                    }
                    row[columns[i]] = r[i];
                }
                rws.push_back(row);
            }
            j["rows"] = rws;
            os << j.dump(2) << "\n";
            return;
        }
        if (format == "csv") {
            auto quote = [](const std::string& s) {
                if (s.find_first_of(",\"\n") == std::string::npos) return s;
                std::string out = "\"";
                for (char c : s) {
                    if (c == '"') out += "\"\"";
                    else out += c;
                }
                return out + "\"";
            };
            for (size_t i = 0; i < columns.size(); ++i)
                std::cout << (i ? "," : "") << quote(columns[i]);
            os << "\r\n";
            for (const auto& r : rows) {
                for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << quote(r[i]);
                os << "\r\n";
            }
            return;
        }
        for (const auto& r : rows) {
            for (size_t i = 0; i < r.size(); ++i)
                os << columns[i] << "=" << r[i] << (i + 1 < r.size() ? "  " : "");
            os << "\n";
        }
    }
};

json label_json(const IrrLabel& l) {
    if (l.kind() == LabelKind::S) {
        json row = json::array();
        for (int x : l.alpha()) row.push_back(x);
        return row;
    }
    auto [top, bottom] = l.symbol();
    json jt = json::array(), jb = json::array();
    for (int x : top) jt.push_back(x);
    for (int x : bottom) jb.push_back(x);
    return json::array({jt, jb});
}

std::string normalize_type(std::string type) {
    if (!type.empty()) type[0] = static_cast<char>(toupper(static_cast<unsigned char>(type[0])));
    return type;
}

int failure_record(const std::string& command, const std::string& what, int code) {
    json j;
    j["command"] = command;
    j["error"] = what;
    std::cout << j.dump() << "\n";
    return code;
}

// ---- subcommand runners ----

int run_elliptic(int n, const std::string& kindStr, OutputRecord& out) {
    GroupKind kind = kind_from_string(kindStr);
    out.columns = {"partition", "sigma", "d_min", "charpoly"};
    for (const auto& p : enumerate_elliptic(n, kind)) {
        auto w = w_min_rep(p, kind);
        auto cp = char_poly_reflection(w);
        out.rows.push_back({p.to_string(), std::to_string(p.sigma()),
                            std::to_string(d_min(p, kind)), cp.label()});
    }
    return kExitPass;
}

int run_springer(const std::string& pStr, const std::string& kindStr, OutputRecord& out) {
    auto p = PartitionSeq::parse(pStr);
    GroupKind kind = kind_from_string(kindStr);
    auto jt = jordan_type(p, kind);
    auto label = springer_label(jt, kind);
    json jl = label_json(label);
    out.columns = {"partition", "jordan", "label"};
    out.rows.push_back({p.to_string(), jt.to_string(),
                        out.format == "json" ? jl.dump() : label.to_string()});
    return kExitPass;
}

int run_jinduce(const std::string& pStr, const std::string& kindStr, OutputRecord& out) {
    auto p = PartitionSeq::parse(pStr);
    GroupKind kind = kind_from_string(kindStr);
    Embedding emb = kind == GroupKind::SP      ? tower_symmetric(p)
                    : kind == GroupKind::SO_ODD ? tower_mixed_corner(p)
                                                : tower_even_corner(p);
    IrrLabel byDef = j_induce(emb, sign_reps_for(emb));
    IrrLabel closed = j_closed_form(p, kind == GroupKind::SP      ? JTowerVariant::SymmetricTower
                                       : kind == GroupKind::SO_ODD ? JTowerVariant::MixedCornerTower
                                                                   : JTowerVariant::EvenCornerTower);
    out.columns = {"partition", "label", "closed_form", "agree"};
    out.rows.push_back({p.to_string(), byDef.to_string(), closed.to_string(),
                        byDef == closed ? "yes" : "no"});
    return byDef == closed ? kExitPass : kExitVerificationFailure;
}

int run_verify_06ii(int n, const std::string& kindFilter, OutputRecord& out) {
    out.columns = {"partition", "kind", "label", "status"};
    bool allPass = true;
    for (const auto& kind : {GroupKind::SP, GroupKind::SO_ODD, GroupKind::SO_EVEN}) {
        if (!kindFilter.empty() && kind != kind_from_string(kindFilter)) continue;
        for (const auto& p : enumerate_elliptic(n, kind)) {
            auto triple = verify_label_triple(p, kind);
            allPass = allPass && triple.pass;
            out.rows.push_back({p.to_string(), to_string(kind), triple.procedure.to_string(),
                                triple.pass ? "pass" : "FAIL " + triple.to_string()});
        }
    }
    return allPass ? kExitPass : kExitVerificationFailure;
}

int run_verify_36(int n, OutputRecord& out) {
    out.columns = {"partition", "label", "status"};
    bool allPass = true;
    for (const auto& p : enumerate_elliptic(n, GroupKind::SP)) {
        bool ok = sp_so_labels_agree(p);
        allPass = allPass && ok;
        auto label = springer_label(jordan_type(p, GroupKind::SP), GroupKind::SP);
        out.rows.push_back({p.to_string(), label.to_string(), ok ? "pass" : "FAIL"});
    }
    return allPass ? kExitPass : kExitVerificationFailure;
}

template <class K>
int run_isometry_impl(const PartitionSeq& p, GroupKind kind, const K& field, unsigned long seed,
                      const std::string& dumpPath, OutputRecord& out) {
    auto lambdas = random_lambdas(p, kind, field, seed);
    auto w = build_class_rep(p, kind, lambdas, field);
    bool orth = verify_orthogonality(w, field);
    auto flags = build_flags(w, field);
    SignedPerm rel = relative_position(flags, field);
    SignedPerm expect = w_min_rep(p, kind);
    auto [formula, kernel] = centralizer_dim(w, field);
    bool relOk = rel == expect;
    bool dimOk = formula == kernel && formula == d_min(p, kind);

    std::ostringstream lamStr;
    for (size_t i = 0; i < lambdas.size(); ++i)
        lamStr << (i ? "," : "") << field.str(lambdas[i]);
    out.columns = {"partition", "kind", "field", "lambdas", "orthogonality", "relpos",
                   "centralizer", "status"};
    out.rows.push_back({p.to_string(), to_string(kind), field.name(), lamStr.str(),
                        orth ? "pass" : "FAIL", rel.to_string() + (relOk ? "" : " (mismatch)"),
                        std::to_string(formula), orth && relOk && dimOk ? "pass" : "FAIL"});

    if (!dumpPath.empty()) {
        json j;
        j["partition"] = p.to_string();
        j["kind"] = to_string(kind);
        j["field"] = field.name();
        json lams = json::array();
        for (const auto& l : lambdas) lams.push_back(field.str(l));
        j["lambdas"] = lams;
        auto matrixJson = [&](const Mat<K>& m) {
            json rows = json::array();
            for (const auto& row : m) {
                json r = json::array();
                for (const auto& x : row) r.push_back(field.str(x));
                rows.push_back(r);
            }
            return rows;
        };
        j["gram"] = matrixJson(w.space.gram);
        j["g"] = matrixJson(w.g);
        j["v"] = matrixJson(w.v);
        std::ofstream f(dumpPath);
        f << j.dump(2) << "\n";
    }
    return orth && relOk && dimOk ? kExitPass : kExitVerificationFailure;
}

int run_isometry(const std::string& pStr, const std::string& kindStr, const std::string& fieldStr,
                 unsigned long seed, const std::string& dumpPath, OutputRecord& out) {
    auto p = PartitionSeq::parse(pStr);
    GroupKind kind = kind_from_string(kindStr);
    if (fieldStr == "q") {
        RatField field;
        return run_isometry_impl(p, kind, field, seed, dumpPath, out);
    }
    long prime = std::stol(fieldStr);
    PrimeField field(prime);
    return run_isometry_impl(p, kind, field, seed, dumpPath, out);
}

int run_pipeline(const std::string& typeIn, const std::string& classLabel, const std::string& kStr,
                 const std::string& dataDir, OutputRecord& out) {
    std::string type = normalize_type(typeIn);
    const RootSystemData& rd = root_data(type);
    std::vector<int> nodes;
    if (kStr != "-") {
        std::stringstream ss(kStr);
        std::string tok;
        while (std::getline(ss, tok, ',')) nodes.push_back(std::stoi(tok));
    }
    SubsystemData sd = subsystem_for(rd, nodes);
    PipelineData data;
    if (!dataDir.empty())
        data = PipelineData::load(dataDir, type);
    else if (type[0] == 'A')
        data = PipelineData::builtin_type_a(rd.rank);
    else
        throw std::invalid_argument("pipeline: built-in data exists only for type A; use --data");
    auto rep = pipeline_count(rd, classLabel, sd, data);
    out.columns = {"type", "class", "K", "P", "csmall", "m", "dim_GK", "d_C"};
    out.rows.push_back({type, classLabel, sd.node_string(), rep.P.to_string(),
                        rep.csmall ? "yes" : "no", rep.m_kc ? rep.m_kc->str() : "-",
                        std::to_string(rep.dim_gk), std::to_string(rep.d_c)});
    return kExitPass;
}

int run_bruteforce(const std::string& group, int q, const std::string& repStr,
                   const std::string& wStr, OutputRecord& out) {
    std::vector<long> entries;
    std::string repBody = repStr;
    if (repBody.rfind("diag:", 0) == 0) {
        repBody = repBody.substr(5);
        std::vector<long> diag;
        std::stringstream ss(repBody);
        std::string tok;
        while (std::getline(ss, tok, ',')) diag.push_back(std::stol(tok));
        size_t dim = group == "sl2" ? 2 : 4;
        if (diag.size() != dim) throw std::invalid_argument("bruteforce: bad diagonal length");
        entries.assign(dim * dim, 0);
        for (size_t i = 0; i < dim; ++i) entries[i * dim + i] = diag[i];
    } else {
        std::stringstream ss(repBody);
        std::string tok;
        while (std::getline(ss, tok, ',')) entries.push_back(std::stol(tok));
    }
    long long count = 0, clsSize = 0;
    if (group == "sl2") {
        count = sl2_pair_count(q, entries, wStr);
        clsSize = sl2_class_size(q, entries);
    } else if (group == "sp4") {
        std::vector<int> window;
        std::stringstream ss(wStr);
        std::string tok;
        while (std::getline(ss, tok, ',')) window.push_back(std::stoi(tok));
        count = sp4_pair_count(q, entries, window);
        clsSize = sp4_class_size(q, entries);
    } else {
        throw std::invalid_argument("bruteforce: group must be sl2 or sp4");
    }
    out.columns = {"group", "q", "w", "class_size", "count"};
    out.rows.push_back({group, std::to_string(q), wStr, std::to_string(clsSize),
                        std::to_string(count)});
    return kExitPass;
}

int run_fixtures(const std::string& type, const std::string& file, OutputRecord& out) {
    auto rep = check_table_fixture(normalize_type(type), file);
    out.columns = {"d", "class", "chi", "subsets", "status"};
    for (const auto& row : rep.rows) {
        out.rows.push_back({std::to_string(row.row.d), row.row.class_label, row.row.chi,
                            row.detail.empty() ? "-" : row.detail,
                            row.dims_ok && row.label_ok ? "pass" : "FAIL"});
    }
    return rep.all_pass() ? kExitPass : kExitVerificationFailure;
}

int run_vandermonde(int m, bool symbolic, OutputRecord& out) {
    auto r1 = vandermonde_check(m, symbolic);
    auto r2 = vandermonde_check_bordered(m, symbolic);
    out.columns = {"matrix", "mode", "status", "detail"};
    out.rows.push_back({"M", r1.mode, r1.pass ? "pass" : "FAIL", r1.detail});
    out.rows.push_back({"M'", r2.mode, r2.pass ? "pass" : "FAIL", r2.detail});
    return r1.pass && r2.pass ? kExitPass : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weyltk: exact computations around elliptic classes, symbol labels and "
                 "truncated induction for the classical Weyl groups"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // elliptic <n> <kind>
    auto* cElliptic = app.add_subcommand("elliptic", "enumerate the elliptic class index set");
    int argN = 0;
    std::string argKind, argP, argField = "q", argClass, argK, argData, argFile, argGroup, argW,
                argRep;
    unsigned long argSeed = 1;
    bool argSymbolic = false;
    int argQ = 5, argM = 2;
    cElliptic->add_option("n", argN)->required();
    cElliptic->add_option("kind", argKind)->required();

    auto* cSpringer = app.add_subcommand("springer", "symbol label of the distinguished class");
    cSpringer->add_option("p", argP)->required();
    cSpringer->add_option("kind", argKind)->required();

    auto* cJinduce = app.add_subcommand("jinduce", "truncated induction from the standard tower");
    cJinduce->add_option("p", argP)->required();
    cJinduce->add_option("kind", argKind)->required();

    auto* cV06 = app.add_subcommand("verify-06ii", "three-way label agreement sweep");
    cV06->add_option("n", argN)->required();
    cV06->add_option("--kind", argKind);

    auto* cV36 = app.add_subcommand("verify-36", "symplectic/odd-orthogonal label agreement");
    cV36->add_option("n", argN)->required();

    auto* cIso = app.add_subcommand("isometry", "exact class witness suite");
    cIso->add_option("p", argP)->required();
    cIso->add_option("kind", argKind)->required();
    cIso->add_option("--seed", argSeed);
    cIso->add_option("--field", argField, "q for rationals, or an odd prime");
    std::string argDump;
    cIso->add_option("--dump", argDump, "write the witness as JSON");

    auto* cPipe = app.add_subcommand("pipeline", "fixed-point count polynomial");
    cPipe->add_option("type", argClass)->required(); // reuse slots: type
    std::string argPipeClass, argPipeK = "-";
    cPipe->add_option("C", argPipeClass)->required();
    cPipe->add_option("K", argPipeK)->required();
    cPipe->add_option("--data", argData, "directory with <type>_A.json / <type>_phi.json");

    auto* cBrute = app.add_subcommand("bruteforce", "exhaustive pair count over a small field");
    cBrute->add_option("group", argGroup)->required();
    cBrute->add_option("q", argQ)->required();
    cBrute->add_option("rep", argRep)->required();
    cBrute->add_option("w", argW)->required();

    auto* cFix = app.add_subcommand("fixtures", "consistency of the shipped exceptional tables");
    cFix->add_option("type", argKind)->required();
    cFix->add_option("--file", argFile);

    auto* cVdm = app.add_subcommand("vandermonde", "determinant identity checks");
    cVdm->add_option("m", argM)->required();
    cVdm->add_flag("--symbolic", argSymbolic);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    OutputRecord out;
    out.format = format;
    out.command = app.get_subcommands().front()->get_name();
    int status = kExitPass;
    try {
        if (cElliptic->parsed()) status = run_elliptic(argN, argKind, out);
        else if (cSpringer->parsed()) status = run_springer(argP, argKind, out);
        else if (cJinduce->parsed()) status = run_jinduce(argP, argKind, out);
        else if (cV06->parsed()) status = run_verify_06ii(argN, argKind, out);
        else if (cV36->parsed()) status = run_verify_36(argN, out);
        else if (cIso->parsed()) status = run_isometry(argP, argKind, argField, argSeed, argDump, out);
        else if (cPipe->parsed()) status = run_pipeline(argClass, argPipeClass, argPipeK, argData, out);
        else if (cBrute->parsed()) status = run_bruteforce(argGroup, argQ, argRep, argW, out);
        else if (cFix->parsed()) status = run_fixtures(argKind, argFile, out);
        else if (cVdm->parsed()) status = run_vandermonde(argM, argSymbolic, out);
    } catch (const std::invalid_argument& e) {
        return failure_record(out.command, e.what(), kExitUsage);
    } catch (const std::exception& e) {
        return failure_record(out.command, e.what(), kExitVerificationFailure);
    }
    out.emit(std::cout);
    return status;
}
