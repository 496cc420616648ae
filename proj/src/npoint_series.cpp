#include "tg/npoint_series.hpp"

#include "tg/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace tg {

void NPointSeries::add_term(std::vector<int> key, const Rational& c) {
    if ((int)key.size() != n) throw std::invalid_argument("NPointSeries: arity mismatch");
    if (c == 0) return;
    std::sort(key.begin(), key.end());
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational NPointSeries::coeff(std::vector<int> key) const {
    if ((int)key.size() != n) throw std::invalid_argument("NPointSeries: arity mismatch");
    std::sort(key.begin(), key.end());
    auto it = terms.find(key);
    return it == terms.end() ? Rational(0) : it->second;
}

NPointSeries np_add(const NPointSeries& a, const NPointSeries& b) {
    if (a.n != b.n) throw std::invalid_argument("np_add: arity mismatch");
    NPointSeries r = a;
    for (const auto& [k, c] : b.terms) r.add_term(k, c);
    return r;
}

NPointSeries np_sub(const NPointSeries& a, const NPointSeries& b) {
    if (a.n != b.n) throw std::invalid_argument("np_sub: arity mismatch");
    NPointSeries r = a;
    for (const auto& [k, c] : b.terms) r.add_term(k, -c);
    return r;
}

NPointSeries np_restrict(const NPointSeries& a, long L) {
    NPointSeries r(a.n);
    for (const auto& [k, c] : a.terms) {
        long tot = 0;
        for (int j : k) tot += j + 1;
        if (tot <= L) r.terms.emplace(k, c);
    }
    return r;
}

std::string np_to_json(const NPointSeries& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [k, c] : s.terms) {
        nlohmann::ordered_json t;
        t["j"] = k;
        t["c"] = to_string(c);
        j["terms"].push_back(std::move(t));
    }
    return j.dump(2) + "\n";
}

NPointSeries np_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    NPointSeries s(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        std::vector<int> key = t.at("j").get<std::vector<int>>();
        s.add_term(std::move(key), rational_from_string(t.at("c").get<std::string>()));
    }
    return s;
}

Integer key_orbit_size(const std::vector<int>& sorted_key) {
    Integer orbit = factorial((long)sorted_key.size());
    for (size_t i = 0; i < sorted_key.size();) {
        size_t j = i;
        while (j < sorted_key.size() && sorted_key[j] == sorted_key[i]) ++j;
        orbit /= factorial((long)(j - i));
        i = j;
    }
    return orbit;
}

} // namespace tg
