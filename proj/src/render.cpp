#include "thag/render.hpp"

#include <cstdlib>
#include <sstream>

namespace thag {

namespace {

std::string parts_joined(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.part(i));
    }
    return out;
}

std::string latex_partition(const Partition& p) {
    if (p.empty()) return "\\varnothing";
    return "(" + parts_joined(p) + ")";
}

// Appends "sign coeff*t^k*body" (text) or "sign coeff t^{k} body" (latex).
void append_term(std::string& out, long long coeff, int t_deg, const std::string& body,
                 bool latex) {
    if (out.empty()) {
        if (coeff < 0) out += '-';
    } else {
        out += coeff < 0 ? " - " : " + ";
    }
    const long long mag = std::llabs(coeff);
    std::string pieces;
    if (mag != 1) pieces = std::to_string(mag);
    if (t_deg > 0) {
        if (!pieces.empty()) pieces += latex ? " " : "*";
        pieces += 't';
        if (t_deg > 1) pieces += latex ? "^{" + std::to_string(t_deg) + "}" : "^" + std::to_string(t_deg);
    }
    if (!pieces.empty()) pieces += latex ? " " : "*";
    out += pieces + body;
}

std::string render_graded(const GradedBiSchur& g, bool latex) {
    if (g.is_zero()) return "0";
    std::string out;
    for (const auto& [t_deg, poly] : g.coefficients()) {
        const auto& terms = poly.terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const Bipartition& shape = it->first;
            std::string body;
            if (latex) {
                body = "V_{" + latex_partition(shape.x) + "," + latex_partition(shape.y) + "}";
            } else {
                body = "s[" + parts_joined(shape.x) + ";" + parts_joined(shape.y) + "]";
            }
            append_term(out, it->second, t_deg, body, latex);
        }
    }
    return out;
}

} // namespace

std::string to_text(const GradedBiSchur& g) { return render_graded(g, false); }

std::string to_latex(const GradedBiSchur& g) { return render_graded(g, true); }

std::string to_text(const IntPoly& p) { return to_string(p); }

std::string to_latex(const IntPoly& p) {
    if (p.degree() < 0) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        long long c = p.coeff(k);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const long long mag = std::llabs(c);
        if (mag != 1 || k == 0) out += std::to_string(mag);
        if (k >= 1) {
            out += 't';
            if (k > 1) out += "^{" + std::to_string(k) + "}";
        }
    }
    return out;
}

} // namespace thag
