#include "phinmod/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "phinmod/certify.hpp"

namespace phinmod {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json witness_json(const AdmissibilityWitness& w) {
    Json j;
    if (w.det_mismatch) {
        j["kind"] = "determinant-mismatch";
        j["t_H"] = w.t_H_D.get_str();
        j["t_N"] = w.t_N_D.str();
        return j;
    }
    j["kind"] = "violating-subspace";
    j["member"] = to_json(w.member_input);
    j["member_t_H"] = w.member_hodge.get_str();
    j["family_t_N"] = w.family.newton.str();
    j["family"] = Json{{"fixed", to_json(w.family.fixed)},
                       {"ambient", to_json(w.family.ambient)},
                       {"dim", w.family.dim}};
    return j;
}

int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err) {
    Json j;
    j["command"] = "validate";
    j["file"] = file;
    std::ifstream in(file);
    if (!in) throw IoError("cannot open '" + file + "'");
    Json doc;
    in >> doc;
    PhiNModule m = module_from_json(doc);
    auto bad = validate_module(m);
    j["violations"] = bad;
    j["verdict"] = bad.empty() ? "ok" : "invalid";
    emit(out, j);
    err << (bad.empty() ? "module is well formed\n" : "module violates invariants\n");
    return bad.empty() ? kYes : kNo;
}

int cmd_admissible(const std::string& file, bool want_witness, std::ostream& out,
                   std::ostream& err) {
    PhiNModule m = parse_module_file(file);
    Admissibility adm = is_admissible(m);
    Json j;
    j["command"] = "admissible";
    j["file"] = file;
    j["verdict"] = adm.admissible ? "admissible" : "not-admissible";
    j["t_H"] = Rat(Rat(m.hodge.r) + Rat(m.hodge.s)).get_str();
    j["t_N"] = m.phi.determinant().valuation().str();
    if (!adm.admissible && (want_witness || adm.witness))
        j["witness"] = witness_json(*adm.witness);
    emit(out, j);
    err << (adm.admissible ? "admissible\n" : "not admissible\n");
    return adm.admissible ? kYes : kNo;
}

int cmd_classify(const std::string& file, std::ostream& out, std::ostream& err) {
    PhiNModule m = parse_module_file(file);
    Json j;
    j["command"] = "classify";
    j["file"] = file;
    try {
        ClassifyResult res = classify(m);
        j["verdict"] = "classified";
        j["family"] = to_json(res.fi);
        j["transition"] = to_json(res.transition);
        ReducibilityReport red = reducibility(res.fi);
        Json rj;
        rj["kind"] = reducibility_kind_name(red.kind);
        Json subs = Json::array();
        for (const auto& s : red.submodules) subs.push_back(to_json(s));
        rj["submodules"] = subs;
        j["reducibility"] = rj;
        emit(out, j);
        err << "classified as " << family_name(res.fi.id) << " ("
            << reducibility_kind_name(red.kind) << ")\n";
        return kYes;
    } catch (const NotAdmissibleError&) {
        j["verdict"] = "not-admissible";
        emit(out, j);
        err << "module is not admissible\n";
        return kNo;
    }
}

int cmd_iso(const std::string& fa, const std::string& fb, bool want_witness,
            std::ostream& out, std::ostream& err) {
    PhiNModule a = parse_module_file(fa);
    PhiNModule b = parse_module_file(fb);
    IsoResult res = are_isomorphic(a, b);
    Json j;
    j["command"] = "iso";
    j["verdict"] = res.isomorphic ? "isomorphic" : "not-isomorphic";
    if (res.isomorphic && want_witness) j["witness"] = to_json(*res.witness);
    emit(out, j);
    err << (res.isomorphic ? "isomorphic\n" : "not isomorphic\n");
    return res.isomorphic ? kYes : kNo;
}

int cmd_enumerate(int r, int s, std::optional<int> rank, std::ostream& out,
                  std::ostream& err) {
    FieldSpec spec = make_field(2, 6);
    auto listing = enumerate_families({r, s}, spec, rank);
    Json j;
    j["command"] = "enumerate";
    j["hodge"] = Json{{"r", r}, {"s", s}};
    if (rank) j["rank_n"] = *rank;
    Json fams = Json::array();
    for (const auto& f : listing)
        fams.push_back(Json{{"id", family_name(f.id)},
                            {"rank_n", f.n_rank},
                            {"constraint", f.constraint}});
    j["families"] = fams;
    emit(out, j);
    err << listing.size() << " satisfiable families\n";
    return kYes;
}

int cmd_instantiate(const std::string& family, const std::string& params, std::ostream& out,
                    std::ostream& err) {
    FieldSpec spec = make_field(2, 6);
    Json pj = Json::parse(params);
    pj["id"] = family;
    FamilyInstance fi = instance_from_json(pj, spec);
    PhiNModule m = instantiate(fi);
    Json j;
    j["command"] = "instantiate";
    j["family"] = to_json(fi);
    j["module"] = to_json(m);
    emit(out, j);
    err << "instantiated " << family << "\n";
    return kYes;
}

int cmd_certify(int r, int s, int samples, std::uint64_t seed, std::ostream& out,
                std::ostream& err) {
    CertifyConfig cfg;
    cfg.hodge = {r, s};
    cfg.samples = samples;
    cfg.seed = seed;
    CertifyReport rep = certify(cfg);
    emit(out, rep.to_json_doc(cfg));
    for (const auto& c : rep.checks)
        err << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.ran << " run, "
            << c.failed << " failed)\n";
    if (!rep.pass) {
        err << "certification failed; counterexample serialized in the report\n";
        return kError;
    }
    return kYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact workbench for 3-dimensional filtered (phi,N)-modules"};
    app.require_subcommand(1);

    std::string file, file_b, family, params = "{}";
    bool want_witness = false;
    int r = 1, s = 2, samples = 200;
    std::uint64_t seed = 1;
    int rank_n = -1;

    auto* validate = app.add_subcommand("validate", "check module invariants");
    validate->add_option("file", file)->required();

    auto* admissible = app.add_subcommand("admissible", "decide weak admissibility");
    admissible->add_option("file", file)->required();
    admissible->add_flag("--witness", want_witness);

    auto* classify_cmd = app.add_subcommand("classify", "identify the normal-form family");
    classify_cmd->add_option("file", file)->required();

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two modules");
    iso->add_option("fileA", file)->required();
    iso->add_option("fileB", file_b)->required();
    iso->add_flag("--witness", want_witness);

    auto* enumerate = app.add_subcommand("enumerate", "satisfiable families for (r,s)");
    enumerate->add_option("--r", r)->required();
    enumerate->add_option("--s", s)->required();
    enumerate->add_option("--rank-n", rank_n);

    auto* inst = app.add_subcommand("instantiate", "build a family representative");
    inst->add_option("--family", family)->required();
    inst->add_option("--params", params);

    auto* cert = app.add_subcommand("certify", "run the randomized certification campaign");
    cert->add_option("--r", r);
    cert->add_option("--s", s);
    cert->add_option("--samples", samples);
    cert->add_option("--seed", seed);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& ex) {
        err << app.help() << "\n" << ex.what() << "\n";
        return kError;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, out, err);
        if (admissible->parsed()) return cmd_admissible(file, want_witness, out, err);
        if (classify_cmd->parsed()) return cmd_classify(file, out, err);
        if (iso->parsed()) return cmd_iso(file, file_b, want_witness, out, err);
        if (enumerate->parsed())
            return cmd_enumerate(r, s, rank_n >= 0 ? std::optional<int>(rank_n) : std::nullopt,
                                 out, err);
        if (inst->parsed()) return cmd_instantiate(family, params, out, err);
        if (cert->parsed()) return cmd_certify(r, s, samples, seed, out, err);
    } catch (const NotAdmissibleError& ex) {
        Json j{{"verdict", "not-admissible"}, {"detail", ex.what()}};
        emit(out, j);
        err << ex.what() << "\n";
        return kNo;
    } catch (const std::exception& ex) {
        Json j{{"verdict", "error"}, {"detail", ex.what()}};
        emit(out, j);
        err << "error: " << ex.what() << "\n";
        return kError;
    }
    err << "unknown command\n";
    return kError;
}

}  // namespace phinmod
