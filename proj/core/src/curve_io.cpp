#include "egr/curve_io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace egr {

namespace {

std::string rat_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

mpq_class parse_rat(const std::string& tok) {
    try {
        size_t slash = tok.find('/');
        if (slash == std::string::npos) return mpq_class(mpz_class(tok));
        mpz_class num(tok.substr(0, slash));
        mpz_class den(tok.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        mpq_class q(num);
        q /= mpq_class(den);
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("curve file: bad rational '" + tok + "'");
    }
}

}  // namespace

std::string curve_to_text(const CurveModel& E) {
    std::ostringstream os;
    os << "m " << E.field().m() << "\n";
    const FieldElement* as[6] = {&E.a1(), &E.a2(), &E.a3(), &E.a4(), nullptr, &E.a6()};
    for (const FieldElement* a : as) {
        if (a == nullptr)
            os << "0 0\n";  // a5
        else
            os << rat_str(a->a()) << " " << rat_str(a->b()) << "\n";
    }
    return os.str();
}

CurveModel curve_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    if (rows.empty() || rows[0].size() != 2 || rows[0][0] != "m")
        throw std::invalid_argument("curve file: first line must be 'm <integer>'");
    mpz_class m;
    try {
        m = mpz_class(rows[0][1]);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("curve file: bad integer '" + rows[0][1] + "'");
    }

    size_t ncoef = rows.size() - 1;
    if (ncoef != 5 && ncoef != 6)
        throw std::invalid_argument("curve file: expected 5 or 6 coefficient lines");
    std::vector<FieldElement> coef;
    QuadraticField K(m);  // throws on non-square-free m
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2)
            throw std::invalid_argument("curve file: coefficient lines are '<rat> <rat>'");
        coef.emplace_back(K, parse_rat(rows[i][0]), parse_rat(rows[i][1]));
    }
    if (ncoef == 6) {
        if (!coef[4].is_zero()) throw std::invalid_argument("curve file: a5 must be zero");
        coef.erase(coef.begin() + 4);
    }
    return CurveModel(K, coef[0], coef[1], coef[2], coef[3], coef[4]);
}

}  // namespace egr
