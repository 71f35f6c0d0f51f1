#pragma once

// JSON forms of scalars, matrices, paravectors, rotor parameters, momenta and reports.

#include <string>

#include "json.hpp"

#include "hyperclifford/physics.hpp"
#include "hyperclifford/report.hpp"

namespace hyperclifford {

using json = nlohmann::json;

inline void to_json(json& j, const HScalar<double>& z) { j = json::array({z.x, z.y, z.v, z.w}); }

/// Accepts a plain number or [x, y, v, w].
inline void from_json(const json& j, HScalar<double>& z) {
    if (j.is_number()) {
        z = HScalar<double>(j.get<double>());
        return;
    }
    if (!j.is_array() || j.size() != 4) throw DomainError("scalar must be a number or [x, y, v, w]");
    z = HScalar<double>(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>());
}

inline void to_json(json& j, const HMatrix<double>& m) {
    j = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c));
        j.push_back(std::move(row));
    }
}

inline void from_json(const json& j, HMatrix<double>& m) {
    if (!j.is_array() || j.empty()) throw DimensionMismatch("matrix must be a non-empty array of rows");
    const std::size_t n = j.size();
    HMatrix<double> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) throw DimensionMismatch("matrix must be square");
        for (std::size_t c = 0; c < n; ++c) out(r, c) = j[r][c].get<HScalar<double>>();
    }
    m = std::move(out);
}

inline json to_json(const Paravector<double>& x) {
    json coords = json::array();
    for (const auto& c : x.coords()) {
        if (c.is_real()) {
            coords.push_back(c.x);
        } else {
            coords.push_back(c);
        }
    }
    return {{"space", std::string(x.space().name())}, {"coords", coords}};
}

inline Paravector<double> paravector_from_json(const json& j) {
    const auto kind = parse_space(j.at("space").get<std::string>());
    if (!kind) throw SpaceMismatch("unknown space " + j.at("space").get<std::string>());
    return Paravector<double>(space<double>(*kind), j.at("coords").get<std::vector<HScalar<double>>>());
}

namespace detail {

inline json vector_params(const std::vector<double>& v, int first_label) {
    json out = json::object();
    for (std::size_t k = 0; k < v.size(); ++k) out[std::to_string(first_label + static_cast<int>(k))] = v[k];
    return out;
}

inline json plane_params(const Antisym6& p) {
    json out = json::object();
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (p(a, b) != 0.0) out[std::to_string(a) + std::to_string(b)] = p(a, b);
    return out;
}

inline std::vector<double> read_vector_params(const json& j, std::size_t n, int first_label) {
    std::vector<double> out(n, 0.0);
    if (j.is_null()) return out;
    for (const auto& [key, value] : j.items()) {
        const int k = std::stoi(key) - first_label;
        if (k < 0 || static_cast<std::size_t>(k) >= n) throw IndexOutOfRange("parameter index " + key);
        out[static_cast<std::size_t>(k)] = value.get<double>();
    }
    return out;
}

inline Antisym6 read_plane_params(const json& j) {
    Antisym6 out;
    if (j.is_null()) return out;
    for (const auto& [key, value] : j.items()) {
        if (key.size() != 2) throw IndexOutOfRange("plane keys are two digits, got " + key);
        out.set(key[0] - '0', key[1] - '0', value.get<double>());
    }
    return out;
}

} // namespace detail

/// {space, phi: {...}, xi: {...}}; keys are "0" for H1, "1".."3" for M4 and plane labels "ab" for E6/R66.
inline json to_json(const RotorParams& p) {
    json out{{"space", std::string(to_string(p.space))}};
    switch (p.space) {
    case SpaceKind::H1:
        out["phi"] = detail::vector_params(p.phi, 0);
        out["xi"] = detail::vector_params(p.xi, 0);
        break;
    case SpaceKind::M4:
    case SpaceKind::HM4:
        out["phi"] = detail::vector_params(p.phi, 1);
        out["xi"] = detail::vector_params(p.xi, 1);
        break;
    case SpaceKind::E6:
    case SpaceKind::R66:
        out["phi"] = detail::plane_params(p.phi_ab);
        out["xi"] = detail::plane_params(p.xi_ab);
        break;
    }
    return out;
}

inline RotorParams rotor_params_from_json(const json& j) {
    const auto kind = parse_space(j.at("space").get<std::string>());
    if (!kind) throw SpaceMismatch("unknown space " + j.at("space").get<std::string>());
    const json phi = j.contains("phi") ? j["phi"] : json();
    const json xi = j.contains("xi") ? j["xi"] : json();
    RotorParams out;
    switch (*kind) {
    case SpaceKind::H1:
        out = RotorParams::h1(detail::read_vector_params(phi, 1, 0)[0], detail::read_vector_params(xi, 1, 0)[0]);
        break;
    case SpaceKind::M4:
    case SpaceKind::HM4: {
        const auto p = detail::read_vector_params(phi, 3, 1);
        const auto x = detail::read_vector_params(xi, 3, 1);
        out = RotorParams::m4({p[0], p[1], p[2]}, {x[0], x[1], x[2]});
        break;
    }
    case SpaceKind::E6:
        out = RotorParams::e6(detail::read_plane_params(phi));
        out.xi_ab = detail::read_plane_params(xi); // rejected by validate() unless zero
        break;
    case SpaceKind::R66: out = RotorParams::r66(detail::read_plane_params(phi), detail::read_plane_params(xi)); break;
    }
    out.validate();
    return out;
}

inline void to_json(json& j, const MomentumHM4<double>& p) { j = {{"q", p.q}, {"o", p.o}, {"s", p.s}, {"u", p.u}}; }

inline void from_json(const json& j, MomentumHM4<double>& p) {
    MomentumHM4<double> out;
    for (auto [key, dest] : {std::pair{"q", &out.q}, std::pair{"o", &out.o}, std::pair{"s", &out.s},
                             std::pair{"u", &out.u}}) {
        if (j.contains(key)) *dest = j[key].get<std::array<double, 4>>();
    }
    p = out;
}

inline void to_json(json& j, const CheckReport& r) {
    j = {{"check_id", r.check_id},
         {"description", r.description},
         {"paper_ref", r.paper_ref},
         {"status", std::string(to_string(r.status))},
         {"max_error", r.max_error},
         {"elapsed_ms", r.elapsed_ms}};
}

inline void from_json(const json& j, CheckReport& r) {
    r.check_id = j.at("check_id").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.paper_ref = j.at("paper_ref").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status == "pass") {
        r.status = Status::pass;
    } else if (status == "fail") {
        r.status = Status::fail;
    } else if (status == "deviation-documented") {
        r.status = Status::deviation_documented;
    } else {
        throw DomainError("unknown status " + status);
    }
    r.max_error = j.at("max_error").get<double>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
}

inline json report_json(const std::vector<CheckReport>& reports) {
    const Summary s = summarize(reports);
    return {{"checks", reports}, {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"deviation", s.deviation}}}};
}

inline std::string sign_symbol(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

inline void to_json(json& j, const InvolutionRow& row) {
    j = {{"unit", row.unit},
         {"bar", sign_symbol(row.bar)},
         {"dagger", sign_symbol(row.dagger)},
         {"hat", sign_symbol(row.hat)},
         {"derived", row.derived}};
}

} // namespace hyperclifford
