#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hitprob/config.hpp"
#include "hitprob/hitsolver.hpp"
#include "hitprob/invariants.hpp"
#include "hitprob/phi.hpp"
#include "hitprob/textio.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hitprob;

namespace {

std::string cache_dir_from_env()
{
    const char* env = std::getenv("HITPROB_CACHE_DIR");
    return env ? std::string(env) : std::string();
}

Solver make_solver()
{
    SolverOptions opts;
    opts.cache_dir = cache_dir_from_env();
    if (!opts.cache_dir.empty())
        fs::create_directories(opts.cache_dir);
    return Solver(std::move(opts));
}

void print_basis(const std::vector<Monomial>& monomials, const std::string& format)
{
    if (format == "json") {
        json arr = json::array();
        for (const Monomial& m : monomials) {
            json row = json::array();
            for (int j = 1; j <= m.vars(); ++j)
                row.push_back(m.exp(j));
            arr.push_back(row);
        }
        std::cout << arr.dump() << '\n';
        return;
    }
    for (const Monomial& m : monomials)
        std::cout << (format == "tuples" ? textio::format_exponents(m)
                                         : textio::format_monomial(m))
                  << '\n';
}

std::vector<Monomial> select_part(const AdmissibleBasis& basis, const std::string& part)
{
    if (part == "zero")
        return basis.zero_part();
    if (part == "plus")
        return basis.plus_part();
    return basis.monomials;
}

int run(int argc, char** argv)
{
    CLI::App app{"Minimal generating sets of F_2[x_1..x_n] over the mod-2 Steenrod algebra"};
    app.require_subcommand(1);

    std::size_t threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all cores)");

    int n = 5;
    std::uint64_t degree = 0;
    std::string weight, format = "text", part = "all", group = "gl";
    bool kernel = false, check_conj = false, reps = false;
    std::uint64_t kameko_m = 0;
    std::string poly_text, fixture_file, identity_name, identity_params;
    bool cache_list = false, cache_clear = false;

    auto* basis_cmd = app.add_subcommand("basis", "admissible-monomial basis");
    basis_cmd->add_option("--n", n)->required();
    basis_cmd->add_option("--degree", degree);
    basis_cmd->add_option("--weight", weight, "weight vector, e.g. 3,3,2,1");
    basis_cmd->add_option("--part", part)->check(CLI::IsMember({"all", "zero", "plus"}));
    basis_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "tuples", "json"}));

    auto* dim_cmd = app.add_subcommand("dim", "dimension of the quotient");
    dim_cmd->add_option("--n", n)->required();
    dim_cmd->add_option("--degree", degree);
    dim_cmd->add_option("--weight", weight);

    auto* hit_cmd = app.add_subcommand("hit", "is the polynomial hit?");
    hit_cmd->add_option("--n", n)->required();
    hit_cmd->add_option("--poly", poly_text)->required();

    auto* kameko_cmd = app.add_subcommand("kameko", "the halving map on admissible classes");
    kameko_cmd->add_option("--n", n)->required();
    kameko_cmd->add_option("--m", kameko_m)->required();
    kameko_cmd->add_flag("--kernel", kernel, "print a kernel basis");

    auto* inv_cmd = app.add_subcommand("invariants", "fixed classes of the group action");
    inv_cmd->add_option("--n", n)->required();
    inv_cmd->add_option("--degree", degree);
    inv_cmd->add_option("--weight", weight);
    inv_cmd->add_option("--group", group)->check(CLI::IsMember({"sigma", "gl"}));
    inv_cmd->add_option("--part", part)->check(CLI::IsMember({"all", "zero", "plus"}));
    inv_cmd->add_flag("--reps", reps, "print invariant class representatives");

    auto* phi_cmd = app.add_subcommand("phi", "lifted generator sets");
    phi_cmd->add_option("--n", n)->required();
    phi_cmd->add_option("--weight", weight)->required();
    phi_cmd->add_flag("--check-conjecture", check_conj,
                      "test Phi(B_{n-1}(w)) inside B_n(w) and report violations");
    phi_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "tuples", "json"}));

    auto* id_cmd = app.add_subcommand("identity", "verify a construction identity");
    id_cmd->add_option("--name", identity_name)->required();
    id_cmd->add_option("--params", identity_params, "comma list key=value");

    auto* fx_cmd = app.add_subcommand("verify-fixture", "compare a fixture against the engine");
    fx_cmd->add_option("--file", fixture_file)->required();

    auto* cache_cmd = app.add_subcommand("cache", "manage the basis cache");
    cache_cmd->add_flag("--list", cache_list);
    cache_cmd->add_flag("--clear", cache_clear);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (threads)
        set_thread_count(threads);

    for (CLI::App* cmd : {basis_cmd, dim_cmd, inv_cmd})
        if (cmd->parsed() && !cmd->count("--degree") && !cmd->count("--weight")) {
            std::cerr << "error: give either --degree or --weight\n";
            return 2;
        }

    Solver solver = make_solver();

    if (basis_cmd->parsed()) {
        AdmissibleBasis b = weight.empty()
                                ? solver.admissible_basis(n, degree)
                                : solver.weight_quotient_basis(n, WeightVector::parse(weight));
        print_basis(select_part(b, part), format);
        return 0;
    }

    if (dim_cmd->parsed()) {
        std::uint64_t dim = weight.empty()
                                ? solver.qp_dimension(n, degree)
                                : solver.qp_dimension(n, WeightVector::parse(weight));
        std::cout << dim << '\n';
        return 0;
    }

    if (hit_cmd->parsed()) {
        Polynomial f = textio::parse_polynomial(poly_text, n);
        std::cout << (solver.is_hit(f) ? "hit" : "not-hit") << '\n';
        return 0;
    }

    if (kameko_cmd->parsed()) {
        KamekoMap km = solver.kameko_matrix(n, kameko_m);
        std::cout << "source=" << km.domain.size() << " target=" << km.target.size()
                  << " rank=" << km.rank << " kernel=" << km.kernel_dimension()
                  << (km.surjective() ? " surjective" : "") << '\n';
        if (kernel)
            for (const Polynomial& f : km.kernel)
                std::cout << textio::format_polynomial(f) << '\n';
        return 0;
    }

    if (inv_cmd->parsed()) {
        AdmissibleBasis b = weight.empty()
                                ? solver.admissible_basis(n, degree)
                                : solver.weight_quotient_basis(n, WeightVector::parse(weight));
        BasisPart bp = part == "zero" ? BasisPart::Zero
                                      : (part == "plus" ? BasisPart::Plus : BasisPart::All);
        std::vector<Polynomial> fixed =
            group == "sigma" ? sigma_fixed(solver, b, bp) : gl_fixed(solver, b, bp);
        std::cout << fixed.size() << '\n';
        if (reps)
            for (const Polynomial& f : fixed)
                std::cout << textio::format_polynomial(f) << '\n';
        return 0;
    }

    if (phi_cmd->parsed()) {
        WeightVector w = WeightVector::parse(weight);
        if (check_conj) {
            ConjectureReport rep = check_conjecture(solver, n, w);
            std::cout << (rep.holds ? "holds" : "fails") << " source=" << rep.source_size
                      << " image=" << rep.image_size << " target=" << rep.target_size << '\n';
            for (const Monomial& m : rep.violations)
                std::cout << "violation: " << textio::format_monomial(m) << '\n';
            return rep.holds ? 0 : 1;
        }
        std::vector<Monomial> source = solver.weight_quotient_basis(n - 1, w).monomials;
        PhiImage img = phi_set(source, n);
        print_basis(img.all, format);
        return 0;
    }

    if (id_cmd->parsed()) {
        IdentityParams params;
        std::istringstream is(identity_params);
        std::string kv;
        while (std::getline(is, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw CLI::ValidationError("--params entries must look like key=value");
            params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        bool ok = verify_identity(solver, identity_name, params);
        std::cout << (ok ? "holds" : "fails") << '\n';
        return ok ? 0 : 1;
    }

    if (fx_cmd->parsed()) {
        textio::Fixture fx = textio::load_fixture(fixture_file);
        AdmissibleBasis b = fx.omega ? solver.weight_quotient_basis(fx.n, *fx.omega)
                                     : solver.admissible_basis(fx.n, fx.d);
        textio::FixtureDiff diff = textio::verify_fixture(fx, select_part(b, fx.part));
        std::cout << (diff.equal() ? "equal" : "different") << " fixture=" << fx.monomials.size()
                  << " computed=" << select_part(b, fx.part).size() << '\n';
        for (const Monomial& m : diff.missing)
            std::cout << "missing: " << textio::format_monomial(m) << '\n';
        for (const Monomial& m : diff.extra)
            std::cout << "extra: " << textio::format_monomial(m) << '\n';
        return diff.equal() ? 0 : 1;
    }

    if (cache_cmd->parsed()) {
        std::string dir = cache_dir_from_env();
        if (dir.empty()) {
            std::cerr << "HITPROB_CACHE_DIR is not set\n";
            return 2;
        }
        if (cache_clear) {
            if (fs::exists(dir))
                for (const auto& entry : fs::directory_iterator(dir))
                    if (entry.path().filename().string().rfind("basis_", 0) == 0)
                        fs::remove(entry.path());
            std::cout << "cleared\n";
            return 0;
        }
        if (fs::exists(dir))
            for (const auto& entry : fs::directory_iterator(dir))
                if (entry.path().filename().string().rfind("basis_", 0) == 0)
                    std::cout << entry.path().filename().string() << '\n';
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
