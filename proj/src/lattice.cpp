#include "fppcert/lattice.hpp"

#include <sstream>

namespace fppcert::lattice {

using ext::CubicElem;
using ext::LambdaElem;
using ext::QuadElem;
using padic::PAdicApprox;

const char* to_string(PlaneId id)
{
    switch (id) {
    case PlaneId::Mumford: return "mumford";
    case PlaneId::CmszA: return "cmsz-a";
    case PlaneId::CmszB: return "cmsz-b";
    }
    return "mumford";
}

PlaneId parse_plane(const std::string& name)
{
    if (name == "mumford")
        return PlaneId::Mumford;
    if (name == "cmsz-a")
        return PlaneId::CmszA;
    if (name == "cmsz-b")
        return PlaneId::CmszB;
    throw Error(ErrorCode::InvalidArgument, "unknown plane '" + name + "'");
}

std::string TorsionShape::to_string() const
{
    std::string s = "Z/" + std::to_string(three_order);
    if (two_rank > 0)
        s += " x (Z/2)^" + std::to_string(two_rank);
    return s;
}

LatticeSpec lattice_spec(PlaneId plane)
{
    switch (plane) {
    case PlaneId::Mumford:
        return {plane, "mumford", {3, 2}, 3, {"sigma", "tau", "rho"}, "rho"};
    case PlaneId::CmszA:
        return {plane, "cmsz-a", {3, 2}, 3, {"a3", "s"}, "a3"};
    case PlaneId::CmszB:
        return {plane, "cmsz-b", {3, 0}, 3, {"a3", "s"}, "a3"};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown plane");
}

MumfordGenerators mumford_generators(const LambdaElem& lam)
{
    const LambdaElem zero(0), one(1), half(mpq_class(1, 2));
    MumfordGenerators g;
    g.lambda = lam;
    g.sigma = {{{{one, zero, lam}, {zero, zero, -one}, {zero, one, -one}}}};
    g.tau = {{{{zero, zero, one}, {one, zero, one + lam}, {zero, one, lam}}}};
    g.rho = {{{{one, zero, lam}, {zero, one, -(lam * lam * lam * half)}, {zero, zero, lam * lam * half}}}};
    return g;
}

CmszGenerators cmsz_generators()
{
    const QuadElem zero(0), one(1), S = QuadElem::S();
    const QuadElem c = (S - QuadElem(1)) * QuadElem(mpq_class(1, 4));
    const QuadElem c5 = (S - QuadElem(5)) * QuadElem(mpq_class(1, 4));
    CmszGenerators g;
    g.a3 = {{{{zero, zero, -c}, {one, zero, one}, {zero, one, c}}}};
    g.s = {{{{zero, -one, -c}, {one, -one, -c5}, {zero, zero, one}}}};
    return g;
}

namespace {

Claim make_claim(std::string id, std::string description, std::string anchor)
{
    Claim c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.anchor = std::move(anchor);
    return c;
}

/* A 2-adic number known only to be 2^v times some unit. */
PAdicApprox unit_times_power(long v) { return PAdicApprox::from_parts(v, 1, 1); }

template <class T>
std::string str(const T& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

CertReport certify_mumford(const MumfordGenerators& gens)
{
    CertReport report;
    const LambdaElem det_sigma = det(gens.sigma);
    const LambdaElem det_tau = det(gens.tau);
    const LambdaElem det_rho = det(gens.rho);
    const LambdaElem expected_rho = gens.lambda * gens.lambda * LambdaElem(mpq_class(1, 2));

    {
        Claim c = make_claim("mumford.sigma_tau_in_sl3", "det(sigma) = det(tau) = 1",
                             "Mumford lattice: sigma, tau in SL3(Q2)");
        c.status = verified_if(det_sigma == LambdaElem(1) && det_tau == LambdaElem(1));
        c.statistics["det_sigma"] = det_sigma.to_string();
        c.statistics["det_tau"] = det_tau.to_string();
        report.add(std::move(c));
    }
    {
        Claim c = make_claim("mumford.det_rho", "det(rho) = lambda^2/2",
                             "Mumford lattice: determinant of rho");
        c.status = verified_if(det_rho == expected_rho);
        c.statistics["det_rho"] = det_rho.to_string();
        c.statistics["expected"] = expected_rho.to_string();
        report.add(std::move(c));
    }
    const long v = ext::valuation(det_rho);
    {
        Claim c = make_claim("mumford.det_rho_valuation", "v(det rho) = 1 for every unit u",
                             "Mumford lattice: det(rho) has valuation 1");
        // A monomial in lambda = 2u has the same valuation for every unit u.
        c.status = verified_if(det_rho.is_monomial() && v == 1);
        c.statistics["valuation"] = v;
        c.statistics["monomial_in_lambda"] = det_rho.is_monomial();
        report.add(std::move(c));
    }
    {
        Claim c = make_claim("mumford.det_rho_noncube", "det(rho) is not a cube in Q2",
                             "Mumford lattice: cube root of det(rho) generates a cubic extension");
        const bool cube = det_rho.is_monomial() && padic::is_cube_in_Q2(unit_times_power(v));
        c.status = verified_if(det_rho.is_monomial() && !cube);
        c.statistics["valuation_mod_3"] = ((v % 3) + 3) % 3;
        report.add(std::move(c));
    }
    return report;
}

CertReport certify_mumford_at_unit(const mpz_class& u, unsigned precision)
{
    if (u % 2 == 0)
        throw Error(ErrorCode::NotAUnit, "u must be odd");
    const auto gens = mumford_generators();
    auto embed = [&](const LambdaElem& x) {
        return PAdicApprox::from_rational(x.evaluate_at_unit(mpq_class(u)), precision);
    };
    const PAdicApprox one = PAdicApprox::from_integer(1, precision);
    const PAdicApprox lam = PAdicApprox::from_integer(2 * u, precision);
    const PAdicApprox det_sigma = det(gens.sigma.map(embed));
    const PAdicApprox det_tau = det(gens.tau.map(embed));
    const PAdicApprox det_rho = det(gens.rho.map(embed));
    const PAdicApprox expected = lam * lam / PAdicApprox::from_integer(2, precision);

    CertReport report;
    const std::string suffix = "@u=" + u.get_str();
    Claim c1 = make_claim("mumford.sigma_tau_in_sl3" + suffix, "det(sigma) = det(tau) = 1 in Q2",
                          "Mumford lattice: sigma, tau in SL3(Q2)");
    c1.status = verified_if(padic::agree(det_sigma, one) && padic::agree(det_tau, one));
    report.add(std::move(c1));
    Claim c2 = make_claim("mumford.det_rho" + suffix, "det(rho) = lambda^2/2 in Q2",
                          "Mumford lattice: determinant of rho");
    c2.status = verified_if(padic::agree(det_rho, expected));
    report.add(std::move(c2));
    Claim c3 = make_claim("mumford.det_rho_valuation" + suffix, "v(det rho) = 1",
                          "Mumford lattice: det(rho) has valuation 1");
    c3.status = verified_if(det_rho.valuation() == 1);
    c3.statistics["valuation"] = det_rho.valuation();
    report.add(std::move(c3));
    Claim c4 = make_claim("mumford.det_rho_noncube" + suffix, "det(rho) is not a cube in Q2",
                          "Mumford lattice: cube root of det(rho) generates a cubic extension");
    c4.status = verified_if(!padic::is_cube_in_Q2(det_rho));
    report.add(std::move(c4));
    return report;
}

CertReport certify_cmsz(const CmszGenerators& gens, unsigned precision)
{
    CertReport report;
    const QuadElem S = QuadElem::S();
    const QuadElem one(1);
    const QuadElem uniformizer = (S - one) * QuadElem(mpq_class(1, 4));
    const QuadElem det_s = det(gens.s);
    const QuadElem det_a3 = det(gens.a3);

    {
        Claim c = make_claim("cmsz.det_s", "det(s) = 1", "CMSZ lattices: s in SL3(Q2)");
        c.status = verified_if(det_s == one);
        c.statistics["det_s"] = det_s.to_string();
        report.add(std::move(c));
    }
    {
        Claim c = make_claim("cmsz.det_a3", "det(a3) = +-(S-1)/4, computed sign recorded",
                             "CMSZ lattices: determinant of a3");
        const bool plus = det_a3 == uniformizer;
        const bool minus = det_a3 == -uniformizer;
        c.status = verified_if(plus || minus);
        c.statistics["det_a3"] = det_a3.to_string();
        c.statistics["computed_sign"] = plus ? 1 : (minus ? -1 : 0);
        c.statistics["stated_sign"] = 1;
        c.statistics["sign_discrepancy"] = minus;
        report.add(std::move(c));
    }
    {
        Claim c = make_claim("cmsz.s_minus_1_valuation", "v(S-1) = 3 via (S-1)(S+1) = -16",
                             "CMSZ lattices: valuation of S-1");
        const QuadElem product = (S - one) * (S + one);
        const auto s_embedded = padic::hensel_sqrt(-15, 1, precision);
        const bool s_one_mod_4 = s_embedded.congruent_to(1, 2);
        // S = 1 mod 4 forces v(S+1) = 1, so v(S-1) = v(-16) - 1.
        const long v_plus = ext::valuation(S + one);
        const long v_product = ext::valuation(product);
        const long v_minus_derived = v_product - v_plus;
        const long v_minus_direct = ext::valuation(S - one);
        c.status = verified_if(product == QuadElem(-16) && s_one_mod_4 && v_plus == 1 &&
                               v_minus_derived == 3 && v_minus_direct == 3);
        c.statistics["product"] = product.to_string();
        c.statistics["S_mod_4"] = s_embedded.residue(2).get_ui();
        c.statistics["v_S_plus_1"] = v_plus;
        c.statistics["v_S_minus_1_from_product"] = v_minus_derived;
        c.statistics["v_S_minus_1_embedded"] = v_minus_direct;
        report.add(std::move(c));
    }
    {
        Claim c = make_claim("cmsz.uniformizer", "(S-1)/4 and det(a3) have valuation 1 and are not cubes",
                             "CMSZ lattices: (S-1)/4 is a uniformizer");
        const long vu = ext::valuation(uniformizer);
        const long vd = ext::valuation(det_a3);
        const bool noncube = !padic::is_cube_in_Q2(ext::embed(det_a3, precision));
        c.status = verified_if(vu == 1 && vd == 1 && noncube);
        c.statistics["v_uniformizer"] = vu;
        c.statistics["v_det_a3"] = vd;
        report.add(std::move(c));
    }
    return report;
}

namespace {

template <class Base>
CertReport verify_lift(const std::string& prefix, const std::string& anchor, const Mat3<Base>& g,
                       int expected_lift_count)
{
    CertReport report;
    const Base d = det(g);
    const auto lifted = lift_to_sl3(g);
    const auto det_lift = det(lifted);
    const auto one = CubicElem<Base>::constant(d, Base(1));
    {
        Claim c = make_claim(prefix + ".lift_det", "det(mu^-1 g) = 1 in base(mu), mu^3 = det g", anchor);
        c.status = verified_if(det_lift == one);
        c.statistics["mu_cubed"] = str(d);
        c.statistics["det_lift_c0"] = str(det_lift[0]);
        report.add(std::move(c));
    }
    {
        Claim c = make_claim(prefix + ".no_cube_root_of_unity",
                             "k = Q2(mu) contains no primitive cube root of 1", anchor);
        const unsigned f = ext::residue_degree_of_kummer(d);
        c.status = verified_if(ext::no_primitive_cube_root(f));
        c.statistics["residue_degree"] = f;
        c.statistics["ramification_index"] = 3;
        c.statistics["v_mu"] = ext::cubic_valuation(CubicElem<Base>::mu(d)).get_str();
        report.add(std::move(c));
    }
    {
        Claim c = make_claim(prefix + ".lift_count", "x^3 - det g has 3 distinct roots, giving 3 lifts",
                             anchor);
        // disc(x^3 - d) = -27 d^2
        const Base disc = Base(-27) * d * d;
        const int roots = ext::is_zero_elem(disc) ? 1 : 3;
        c.status = verified_if(roots == expected_lift_count);
        c.statistics["lift_count"] = roots;
        c.statistics["discriminant"] = str(disc);
        report.add(std::move(c));
    }
    return report;
}

}  // namespace

CertReport build_and_verify_lift(const LatticeSpec& plane)
{
    if (plane.plane == PlaneId::Mumford)
        return verify_lift(plane.name, "Mumford lattice: rho' = mu^-1 rho lies in SL3(k)",
                           mumford_generators().rho, plane.lift_count);
    return verify_lift(plane.name, "CMSZ lattices: modified a3 lies in SL3(k)", cmsz_generators().a3,
                       plane.lift_count);
}

CertReport paper_asserted_facts(const LatticeSpec& plane)
{
    CertReport report;
    auto add = [&](std::string id, std::string description, std::string anchor) {
        Claim c = make_claim(plane.name + "." + id, std::move(description), std::move(anchor));
        c.status = Status::PaperAsserted;
        report.add(std::move(c));
    };
    if (plane.plane == PlaneId::Mumford)
        add("index_21", "Gamma has index 21 in Gamma_1", "Mumford lattice: sublattice of index 21");
    else
        add("sublattice", "Gamma is a sublattice of the group generated by a3 and s",
            "CMSZ lattices: sublattices of Gamma_1");
    add("hom_to_mu3_order_3", "Hom(Gamma, mu_3) has order three, so there are exactly three lifts to SL3",
        "lifts: Hom(Gamma, mu_3)");
    add("galois_closure_s3", "the Galois closure K of k has Galois group S3 over Q2",
        "Galois closure of the cubic extension");
    Claim torsion = make_claim(plane.name + ".picard_torsion", "torsion of P is " + plane.torsion_of_P.to_string(),
                               "structure of the Picard subgroup P");
    torsion.status = Status::PaperAsserted;
    torsion.statistics["torsion"] = plane.torsion_of_P.to_string();
    report.add(std::move(torsion));
    return report;
}

namespace {

nlohmann::ordered_json to_json(const QuadElem& x)
{
    return {{"a", x.rational_part().get_str()}, {"b", x.s_part().get_str()}};
}

nlohmann::ordered_json to_json(const LambdaElem& x)
{
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& [power, c] : x.terms())
        terms[std::to_string(power)] = c.get_str();
    return terms;
}

template <class T>
nlohmann::ordered_json matrix_json(const Mat3<T>& m)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : m.m) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& x : row)
            r.push_back(to_json(x));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

nlohmann::ordered_json generator_matrices_json()
{
    const auto mumford = mumford_generators();
    const auto cmsz = cmsz_generators();
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["mumford"] = {
        {"ring", "Q(lambda), lambda = 2u with u a 2-adic unit; entry = {power of lambda: rational}"},
        {"generators",
         {{"sigma", matrix_json(mumford.sigma)}, {"tau", matrix_json(mumford.tau)}, {"rho", matrix_json(mumford.rho)}}},
    };
    j["cmsz"] = {
        {"ring", "Q(S), S^2 = -15, S = 1 mod 4 in Z_2; entry = a + b*S"},
        {"planes", {"cmsz-a", "cmsz-b"}},
        {"generators", {{"a3", matrix_json(cmsz.a3)}, {"s", matrix_json(cmsz.s)}}},
    };
    return j;
}

}  // namespace fppcert::lattice
