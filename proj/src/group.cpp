#include <indcat/group.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace indcat::grp {

Letters reduce(Letters w) {
    Letters out;
    out.reserve(w.size());
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Letters inverse(const Letters& w) {
    Letters r(w.rbegin(), w.rend());
    for (int& l : r) l = -l;
    return r;
}

Letters concat(const Letters& a, const Letters& b) {
    Letters r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Letters parse_word(const std::vector<std::string>& generators, std::string_view text) {
    Letters out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        int exp = 1;
        std::string name = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                std::size_t used = 0;
                exp = std::stoi(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw Error(Errc::ParseError, "bad exponent in '" + tok + "'");
            }
        }
        auto it = std::find(generators.begin(), generators.end(), name);
        if (it == generators.end()) throw Error(Errc::ParseError, "unknown generator '" + name + "'");
        const int letter = static_cast<int>(it - generators.begin()) + 1;
        for (int k = 0; k < std::abs(exp); ++k) out.push_back(exp < 0 ? -letter : letter);
    }
    return out;
}

std::string format_word(const std::vector<std::string>& generators, const Letters& w) {
    if (w.empty()) return "1";
    std::string s;
    for (int l : w) {
        if (!s.empty()) s += ' ';
        s += generators[static_cast<std::size_t>(std::abs(l) - 1)];
        if (l < 0) s += "^-1";
    }
    return s;
}

Perm perm_identity(int degree) {
    Perm p(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

Perm perm_then(const Perm& first, const Perm& second) {
    Perm r(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) r[i] = second[static_cast<std::size_t>(first[i])];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

Perm parse_perm(std::string_view text, int degree) {
    if (degree < 1 || degree > 6) throw Error(Errc::PreconditionViolated, "permutation degree must be 1..6");
    Perm p = perm_identity(degree);
    if (text == "id") return p;
    std::vector<int> cycle;
    bool open = false;
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch == '(') {
            if (open) throw Error(Errc::ParseError, "nested cycle");
            open = true;
            cycle.clear();
        } else if (ch == ')') {
            if (!open) throw Error(Errc::ParseError, "unbalanced cycle");
            open = false;
            for (std::size_t i = 0; i < cycle.size(); ++i)
                p[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        } else if (ch >= '1' && ch <= '9') {
            const int pt = ch - '1';
            if (!open || pt >= degree || seen[static_cast<std::size_t>(pt)])
                throw Error(Errc::ParseError, "bad point in permutation '" + std::string(text) + "'");
            seen[static_cast<std::size_t>(pt)] = true;
            cycle.push_back(pt);
        } else {
            throw Error(Errc::ParseError, "bad character in permutation '" + std::string(text) + "'");
        }
    }
    if (open) throw Error(Errc::ParseError, "unterminated cycle");
    return p;
}

std::string format_perm(const Perm& p) {
    std::string s;
    std::vector<bool> done(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == static_cast<int>(i)) continue;
        s += '(';
        for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(p[j])) {
            done[j] = true;
            s += static_cast<char>('1' + j);
        }
        s += ')';
    }
    return s.empty() ? "id" : s;
}

Perm eval(const Hom& h, const Letters& w) {
    Perm r = perm_identity(h.degree);
    for (int l : w) {
        const Perm& g = h.images.at(static_cast<std::size_t>(std::abs(l) - 1));
        r = perm_then(r, l > 0 ? g : perm_inverse(g));
    }
    return r;
}

namespace {

bool is_rotation_of(const Letters& piece, const Letters& r) {
    if (piece.size() != r.size() || r.empty()) return false;
    for (std::size_t s = 0; s < r.size(); ++s)
        if (std::equal(piece.begin(), piece.end() - static_cast<long>(s), r.begin() + static_cast<long>(s)) &&
            std::equal(piece.end() - static_cast<long>(s), piece.end(), r.begin()))
            return true;
    return false;
}

}  // namespace

bool is_trivial_piece(const Presentation& pres, const Letters& piece) {
    if (piece.size() == 2 && piece[0] == -piece[1]) return true;
    for (const auto& r : pres.relators)
        if (is_rotation_of(piece, r) || is_rotation_of(piece, inverse(r))) return true;
    return false;
}

void check_derivation(const Presentation& pres, const std::vector<Letters>& steps) {
    for (std::size_t i = 1; i < steps.size(); ++i) {
        const Letters& a = steps[i - 1];
        const Letters& b = steps[i];
        const Letters& small = a.size() < b.size() ? a : b;
        const Letters& big = a.size() < b.size() ? b : a;
        const std::size_t d = big.size() - small.size();
        bool ok = false;
        if (d > 0)
            for (std::size_t k = 0; k <= small.size() && !ok; ++k) {
                if (!std::equal(small.begin(), small.begin() + static_cast<long>(k), big.begin())) break;
                if (!std::equal(small.begin() + static_cast<long>(k), small.end(), big.begin() + static_cast<long>(k + d)))
                    continue;
                ok = is_trivial_piece(pres, Letters(big.begin() + static_cast<long>(k), big.begin() + static_cast<long>(k + d)));
            }
        if (!ok) throw Error(Errc::BadDerivationStep, "step " + std::to_string(i));
    }
}

void check_hom(const Presentation& pres, const Hom& h) {
    if (h.images.size() != pres.generators.size())
        throw Error(Errc::MalformedProblem, "hom needs one image per generator");
    for (std::size_t i = 0; i < pres.relators.size(); ++i)
        if (eval(h, pres.relators[i]) != perm_identity(h.degree))
            throw Error(Errc::RelatorNotKilled, format_word(pres.generators, pres.relators[i]));
}

std::vector<Perm> generated_subgroup(const std::vector<Perm>& gens, int degree) {
    std::set<Perm> seen{perm_identity(degree)};
    std::vector<Perm> frontier{perm_identity(degree)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Perm q = perm_then(p, g);
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Verdict verify_witness(const WitnessRequest& req) {
    Diagram w;
    w.params["w1"] = format_word(req.pres.generators, req.w1);
    w.params["w2"] = format_word(req.pres.generators, req.w2);
    if (req.hom) {
        check_hom(req.pres, *req.hom);
        if (eval(*req.hom, req.w1) == eval(*req.hom, req.w2))
            return Verdict::fails(w, "hom does not separate the words");
    }
    if (req.derivation) {
        const Presentation& dp = req.derivation_pres ? *req.derivation_pres : req.pres;
        const auto& steps = *req.derivation;
        if (steps.empty() || steps.front() != req.w1 || steps.back() != req.w2)
            throw Error(Errc::BadDerivationStep, "derivation must start at w1 and end at w2");
        check_derivation(dp, steps);
    }
    return Verdict::holds(0, "witness verified");
}

bool member_by_expression(const std::vector<Letters>& subgens, const Letters& expr, const Letters& w) {
    Letters sub;
    for (int l : expr) {
        const auto idx = static_cast<std::size_t>(std::abs(l) - 1);
        if (idx >= subgens.size()) return false;
        sub = concat(sub, l > 0 ? subgens[idx] : inverse(subgens[idx]));
    }
    return reduce(sub) == reduce(w);
}

bool separated_from_subgroup(const Hom& h, const std::vector<Letters>& subgens, const Letters& w) {
    std::vector<Perm> images;
    for (const auto& g : subgens) images.push_back(eval(h, g));
    const auto sub = generated_subgroup(images, h.degree);
    return !std::binary_search(sub.begin(), sub.end(), eval(h, w));
}

}  // namespace indcat::grp
