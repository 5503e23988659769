#include "qmirror/serialize.hpp"

#include "qmirror/error.hpp"

namespace qmirror {

namespace {

int order_to_wire(int order2) { return order2 >= HalfLogSeries::kExact ? -1 : order2; }
int order_from_wire(int order2) { return order2 < 0 ? HalfLogSeries::kExact : order2; }

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        fail(ErrorKind::Parse, e.what());
    }
}

}  // namespace

Json to_json(const ConstScalar& c) {
    Json terms = Json::array();
    for (const auto& [key, value] : c.terms())
        terms.push_back({{"two_pi_i_pow", key.two_pi_i_pow}, {"zeta3", key.zeta3}, {"coeff", to_string(value)}});
    return Json{{"terms", terms}};
}

ConstScalar const_scalar_from_json(const Json& j) {
    return guarded([&] {
        ConstScalar out;
        for (const auto& t : j.at("terms")) {
            int zeta = t.at("zeta3").get<int>();
            if (zeta != 0 && zeta != 1) fail(ErrorKind::Parse, "zeta3 flag must be 0 or 1");
            out += ConstScalar::monomial(t.at("two_pi_i_pow").get<int>(), zeta,
                                         parse_rational(t.at("coeff").get<std::string>()));
        }
        return out;
    });
}

Json to_json(const HalfLogSeries& s) {
    Json coeffs = Json::array();
    for (int m = 0; m < s.extent(); ++m)
        for (int k = 0; k <= HalfLogSeries::kMaxLog; ++k) {
            const auto& c = s.coeff(m, k);
            if (c.is_zero()) continue;
            coeffs.push_back({{"m2", m}, {"logpow", k}, {"value", to_json(c)}});
        }
    return Json{{"var", to_string(s.var())}, {"order2", order_to_wire(s.order2())}, {"coeffs", coeffs}};
}

HalfLogSeries series_from_json(const Json& j) {
    return guarded([&] {
        std::string var = j.at("var").get<std::string>();
        if (var != "z" && var != "q") fail(ErrorKind::Parse, "series variable must be z or q");
        HalfLogSeries out(var == "z" ? Var::z : Var::q, order_from_wire(j.at("order2").get<int>()));
        for (const auto& c : j.at("coeffs")) {
            int m2 = c.at("m2").get<int>();
            int k = c.at("logpow").get<int>();
            if (m2 < 0 || m2 > out.order2()) fail(ErrorKind::Parse, "coefficient exponent outside the truncation order");
            if (k < 0 || k > HalfLogSeries::kMaxLog) fail(ErrorKind::Parse, "log power outside 0..3");
            out.add_to(m2, k, const_scalar_from_json(c.at("value")));
        }
        return out;
    });
}

Json to_json(const UPoly& p) {
    Json terms = Json::array();
    for (int d = 0; d <= UPoly::kMaxDegree; ++d)
        if (!p.coeff(d).is_zero()) terms.push_back({{"upow", d}, {"series", to_json(p.coeff(d))}});
    return Json{{"var", "u"}, {"order2", order_to_wire(p.order2())}, {"terms", terms}};
}

UPoly upoly_from_json(const Json& j) {
    return guarded([&] {
        UPoly out(order_from_wire(j.at("order2").get<int>()));
        for (const auto& t : j.at("terms")) out.set_coeff(t.at("upow").get<int>(), series_from_json(t.at("series")));
        return out;
    });
}

}  // namespace qmirror
