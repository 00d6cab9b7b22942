#pragma once

// JSON and CSV serialization of trajectories, caustic lists and certificates.
// Keys keep insertion order so output is byte-stable.

#include <pellipse/caustics.hpp>
#include <pellipse/dynamics.hpp>
#include <pellipse/extremal.hpp>

#include <json.hpp>

#include <sstream>
#include <string>

namespace pellipse::io {

using json = nlohmann::ordered_json;

template <class T>
json scalar(const T& v) {
    return to_double(v);
}

template <class T>
json ext_real(const ExtReal<T>& g) {
    switch (g.kind) {
        case ExtReal<T>::Kind::Finite: return scalar(g.value);
        case ExtReal<T>::Kind::Infinity: return "infinity";
        case ExtReal<T>::Kind::AllConics: return "all";
    }
    return nullptr;
}

template <class T>
json polynomial(const Polynomial<T>& p) {
    json a = json::array();
    for (const T& c : p.coeffs()) a.push_back(to_double(c));
    return a;
}

inline json exact_polynomial(const Polynomial<Rational>& p) {
    json a = json::array();
    for (const Rational& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

template <class T>
json trajectory(const Trajectory<T>& tr, const ClosureStatus& closure) {
    json j;
    j["a"] = scalar(tr.a);
    j["b"] = scalar(tr.b);
    j["gamma"] = ext_real(tr.caustic_gamma);
    j["segment_type"] = to_string(tr.segment_type);
    json v = json::array();
    for (const auto& P : tr.vertices) v.push_back({to_double(P.x), to_double(P.y)});
    j["vertices"] = v;
    json c = json::array();
    for (ArcClass k : tr.arc_classes) c.push_back(to_string(k));
    j["arc_classes"] = c;
    j["closure"] = {{"tag", closure.tag()}, {"n", closure.n}, {"sigma", to_string(closure.sigma)}};
    return j;
}

template <class T>
std::string trajectory_csv(const Trajectory<T>& tr) {
    std::ostringstream os;
    os.precision(17);
    os << "step,x,y,dx,dy,arc_class\n";
    for (std::size_t i = 0; i < tr.vertices.size(); ++i)
        os << i << ',' << to_double(tr.vertices[i].x) << ',' << to_double(tr.vertices[i].y) << ','
           << to_double(tr.directions[i].x) << ',' << to_double(tr.directions[i].y) << ','
           << to_string(tr.arc_classes[i]) << '\n';
    return os.str();
}

inline json caustic_record(const CausticRecord& r, bool elliptic) {
    json j;
    j["gamma"] = r.gamma;
    j["conic"] = to_string(r.conic);
    j["n1"] = r.n1;
    j["n2"] = r.n2;
    j["validated"] = r.validated;
    if (elliptic) {
        j["case"] = std::string(1, r.case_id);
        j["sigma"] = to_string(r.sigma);
    }
    j["source"] = r.source;
    return j;
}

inline json caustic_list(const CausticList& L) {
    const bool elliptic = L.kind == "elliptic";
    json j;
    j["n"] = L.n;
    j["kind"] = L.kind;
    json g = json::array();
    for (const auto& r : L.gammas) g.push_back(caustic_record(r, elliptic));
    j["gammas"] = g;
    json lower = json::array();
    for (const auto& r : L.lower_period) lower.push_back(caustic_record(r, elliptic));
    j["lower_period"] = lower;
    json d = json::array();
    for (const auto& x : L.discarded) d.push_back({{"gamma", x.gamma}, {"reason", x.reason}});
    j["discarded"] = d;
    return j;
}

inline std::string caustic_list_csv(const CausticList& L) {
    std::ostringstream os;
    os.precision(17);
    os << "gamma,conic,n1,n2,validated,case,source\n";
    for (const auto& r : L.gammas)
        os << r.gamma << ',' << to_string(r.conic) << ',' << r.n1 << ',' << r.n2 << ',' << (r.validated ? 1 : 0)
           << ',' << (r.case_id ? std::string(1, r.case_id) : std::string()) << ',' << r.source << '\n';
    return os.str();
}

template <class T>
json certificate(const PellCertificate<T>& c, const KlnResult& kln) {
    json j;
    j["n"] = c.n;
    j["gamma"] = c.gamma;
    j["c"] = {c.intervals.c[0], c.intervals.c[1], c.intervals.c[2], c.intervals.c[3]};
    j["p_hat"] = polynomial(c.p_hat);
    j["q_hat"] = polynomial(c.q_hat);
    if constexpr (is_exact_v<T>) {
        j["p_hat_exact"] = exact_polynomial(c.p_hat);
        j["q_hat_exact"] = exact_polynomial(c.q_hat);
    }
    j["residual"] = c.residual;
    j["tau1"] = c.tau1;
    j["tau2"] = c.tau2;
    j["partition"] = {c.n, c.n1};
    j["alternation_count"] = c.alternation_count;
    j["alternates"] = c.alternates;
    j["signature_matches_partition"] = c.signature_matches_partition();
    j["kln_ratio"] = kln.ratio;
    return j;
}

template <class T>
json elliptic_certificate(const PellPair<T>& p, double gamma) {
    json j;
    j["n"] = p.n;
    j["gamma"] = gamma;
    j["case"] = std::string(1, p.case_id);
    j["variant"] = to_string(p.layout.variant);
    j["A"] = polynomial(p.A);
    j["B"] = polynomial(p.Bq);
    j["p"] = polynomial(p.P);
    j["q"] = polynomial(p.Q);
    j["c"] = scalar(p.c);
    j["residual"] = p.residual;
    return j;
}

} // namespace pellipse::io
