#include "gsp4/report.hpp"

#include <sstream>

#include "gsp4/errors.hpp"

namespace gsp4 {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "skipped";
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    throw InputError("unknown format '" + s + "' (expected json, text or csv)");
}

void VerificationReport::witness(std::string description, std::string value) {
    witnesses.push_back({std::move(description), std::move(value), std::nullopt});
}

void VerificationReport::witness(std::string description, std::string value, std::string error) {
    witnesses.push_back({std::move(description), std::move(value), std::move(error)});
}

void VerificationReport::cite(const std::string& key) {
    const std::string& quote = citation(key);
    for (const auto& c : citations)
        if (c == quote) return;
    citations.push_back(quote);
}

const std::vector<std::pair<std::string, std::string>>& citation_table() {
    static const std::vector<std::pair<std::string, std::string>> table{
        {"weights", "triples (k, k', c) such that k+k' ≡ c (mod 2)"},
        {"weyl", "s_1.λ(k, k', c)=λ(k', k, c)"},
        {"branching", "equivalent to the following inequalities"},
        {"parity", "Assume that k+k' ≡ p+q (mod 2)"},
        {"direct-factor", "direct factor … of the representation r^{⊗(k+k')}"},
        {"standard-basis", "which we call a standard basis"},
        {"cayley", "v=Jw ∈ E_ℂ"},
        {"projection", "image of X_{(1,-1)}v under the G'-equivariant projection"},
        {"nonvanishing", "verifed numerically the non-vanishing of λ_i(v)"},
        {"wedge", "⋀²𝔭⁺ ⊗ 𝔭⁻ = τ_{(3, -1)} ⊕ τ_{(2, 0)} ⊕ τ_{(1, 1)}"},
        {"packet", "there exist four isomorphism classes"},
        {"minimal-k-types", "τ_{(k+3, k'+3)}, τ_{(k+3, -k'-1)}, τ_{(k'+1, -k-3)}, τ_{(-k'-3, -k-3)}"},
        {"hodge", "The Hodge decomposition of M_B(π_f, E)"},
        {"multiplicity-one", "m(π′_∞ ⊗ π_f)=1 for any π′_∞"},
        {"constants-A", "A_{k, k', i, j} = (k+k'+4-i)!/(k+k'+4-(i+j))!"},
        {"constants-B", "B_{k, k', i} = (i+1)(k+k'+4-i)"},
        {"alpha", "An easy computation shows that α = 1/4"},
        {"beta3", "equal to 3/80 ad³"},
        {"pairing", "(-1)^{r+s}(2i)^{-p-q} \\binom{p}{r}\\binom{q}{s}"},
        {"assemble", "the pairing ⟨ω, [ρ]⟩_B equals"},
        {"survival", "imply the vanishing of its archimedean factor"},
        {"witness-2j3", "-2j+3 ≠ 0"},
        {"unramified", "L(s+1/2, ν_{1,p}) L(s+1/2, ν_{2,p}) L(s+2, π_p, r)"},
        {"antisymmetrizer", "Let 𝒜 denote Σ_{w∈W} (-1)^{l(w)} w"},
        {"claim", "This proves our claim"},
        {"bessel", "p^{-3m/2} 𝒜(α_3^{m+2}α_4^{-1})/𝒜(α_3^2 α_4^{-1})"},
        {"satake", "α_1=b_0 b_1 b_2"},
        {"tate-unramified", "Z_v(g, ν_{j,v}, p+q+3/2) = L_v(p+q+2, ν_j)"},
        {"meijer", "G^{4, 0}_{2, 4}(z, a_1, a_2, c_1, c_2, c_3, c_4)"},
        {"meijer-params", "a_1 = (t-λ_2-(q-p)/2+2)/2"},
        {"arch-vanishing", "If t+λ_2+r ≠ 0 or -t+λ_1+s ≠ 0"},
        {"mellin", "by the Mellin inversion formula"},
        {"tate-arch", "(-1)^{(p+q+r+s)/2} π^{-2(p+q)} Γ(p+q)^2"},
        {"gamma-one", "Γ(c_i + (3(p+q)+6)/4) ∼ 1"},
        {"gamma-half", "Γ(c_4+(3(p+q)+6)/4) ∼ π^{1/2}"},
        {"theorem", "π^{-2}a(π, ν_1, ν_2) c^-(π_f, W)"},
    };
    return table;
}

const std::string& citation(const std::string& key) {
    for (const auto& [k, v] : citation_table())
        if (k == key) return v;
    throw InternalError("unknown citation key " + key);
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_elapsed) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["status"] = to_string(r.status);
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::ordered_json o;
        o["description"] = w.description;
        o["value"] = w.value;
        if (w.error) o["error"] = *w.error;
        ws.push_back(o);
    }
    j["witnesses"] = ws;
    j["citations"] = r.citations;
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    if (with_elapsed) j["elapsedMs"] = r.elapsed_ms;
    return j;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_csv(const VerificationReport& r) {
    if (r.columns.empty()) throw InputError("csv output is only available for tabular commands");
    std::ostringstream os;
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_field(r.columns[i]);
    os << "\n";
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.check << ": " << to_string(r.status) << "\n";
    for (const auto& w : r.witnesses) {
        os << "  " << w.description << " = " << w.value;
        if (w.error) os << "  (error " << *w.error << ")";
        os << "\n";
    }
    if (r.seed) os << "  seed " << *r.seed << "\n";
    for (const auto& c : r.citations) os << "  cites \"" << c << "\"\n";
    os << "  elapsed " << r.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace

std::string render(const VerificationReport& r, Format f) {
    switch (f) {
        case Format::Json: return to_json(r).dump(2) + "\n";
        case Format::Text: return render_text(r);
        case Format::Csv: return render_csv(r);
    }
    return {};
}

std::string render(const std::vector<VerificationReport>& rs, Format f) {
    if (rs.size() == 1) return render(rs.front(), f);
    if (f == Format::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rs) arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }
    std::string out;
    for (const auto& r : rs) out += render(r, f);
    return out;
}

}  // namespace gsp4
