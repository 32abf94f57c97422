#pragma once

#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "curveinv/numeric.hpp"

namespace curveinv {

using OrderedJson = nlohmann::ordered_json;

enum class Provenance { ExactTheorem, UpperBound, ConsistencyCheck };

inline std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::ExactTheorem: return "exact-theorem";
        case Provenance::UpperBound: return "upper-bound";
        case Provenance::ConsistencyCheck: return "consistency-check";
    }
    return "?";
}

inline Provenance provenance_from_name(const std::string& s) {
    if (s == "exact-theorem") return Provenance::ExactTheorem;
    if (s == "upper-bound") return Provenance::UpperBound;
    if (s == "consistency-check") return Provenance::ConsistencyCheck;
    throw ParseError("unknown provenance tag '" + s + "'");
}

/// One decimal rendering rule for every transcendental value in reports.
inline std::string render_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

using IntPair = std::pair<long long, long long>;

using FieldValue = std::variant<bool,
                                long long,
                                BigRat,
                                double,
                                std::string,
                                std::vector<std::string>,
                                std::vector<BigInt>,
                                std::vector<IntPair>,
                                IntPair>;

struct ReportField {
    std::string key;
    FieldValue value;
    Provenance provenance = Provenance::ExactTheorem;
    std::string citation;  // empty when the value has no named source
};

/// A computed-invariant record: subject descriptor, ordered tagged fields and
/// free-form notes.  Serialization is deterministic; equality is defined on
/// the serialized form.
class InvariantReport {
public:
    explicit InvariantReport(std::string subject) : subject_(std::move(subject)) {}

    InvariantReport& add(std::string key, FieldValue value, Provenance provenance,
                         std::string citation = {}) {
        fields_.push_back({std::move(key), std::move(value), provenance, std::move(citation)});
        return *this;
    }

    InvariantReport& note(std::string text) {
        notes_.push_back(std::move(text));
        return *this;
    }

    const std::string& subject() const { return subject_; }
    const std::vector<ReportField>& fields() const { return fields_; }
    const std::vector<std::string>& notes() const { return notes_; }

    const ReportField* find(const std::string& key) const {
        for (const auto& f : fields_)
            if (f.key == key) return &f;
        return nullptr;
    }

    OrderedJson to_json() const {
        OrderedJson j;
        j["schema"] = 1;
        j["subject"] = subject_;
        for (const auto& f : fields_) j[f.key] = encode_value(f.value);
        OrderedJson prov = OrderedJson::object();
        for (const auto& f : fields_) prov[f.key] = provenance_name(f.provenance);
        j["provenance"] = prov;
        OrderedJson cites = OrderedJson::object();
        for (const auto& f : fields_)
            if (!f.citation.empty()) cites[f.key] = f.citation;
        j["citations"] = cites;
        j["notes"] = notes_;
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    std::string to_text() const {
        std::string out = subject_ + "\n";
        for (const auto& f : fields_) {
            out += "  " + f.key + ": " + render_value(f.value);
            if (!f.citation.empty()) out += " [" + f.citation + "]";
            out += "\n";
        }
        if (!notes_.empty()) {
            out += "notes:\n";
            for (const auto& n : notes_) out += "  - " + n + "\n";
        }
        return out;
    }

    static InvariantReport from_json(const OrderedJson& j);

    friend bool operator==(const InvariantReport& lhs, const InvariantReport& rhs) {
        return lhs.to_json_string() == rhs.to_json_string();
    }

private:
    static OrderedJson encode_bigint(const BigInt& v) {
        static const BigInt lo = std::numeric_limits<std::int64_t>::min();
        static const BigInt hi = std::numeric_limits<std::int64_t>::max();
        if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
        return v.str();
    }

    static OrderedJson encode_value(const FieldValue& v) {
        return std::visit(
            [](const auto& x) -> OrderedJson {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, bool>) {
                    return x;
                } else if constexpr (std::is_same_v<T, long long>) {
                    return x;
                } else if constexpr (std::is_same_v<T, BigRat>) {
                    OrderedJson r;
                    r["num"] = encode_bigint(boost::multiprecision::numerator(x));
                    r["den"] = encode_bigint(boost::multiprecision::denominator(x));
                    return r;
                } else if constexpr (std::is_same_v<T, double>) {
                    return render_real(x);
                } else if constexpr (std::is_same_v<T, std::string>) {
                    return x;
                } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
                    return OrderedJson(x);
                } else if constexpr (std::is_same_v<T, std::vector<BigInt>>) {
                    OrderedJson arr = OrderedJson::array();
                    for (const auto& c : x) arr.push_back(encode_bigint(c));
                    return arr;
                } else if constexpr (std::is_same_v<T, std::vector<IntPair>>) {
                    OrderedJson arr = OrderedJson::array();
                    for (const auto& p : x) arr.push_back({p.first, p.second});
                    return arr;
                } else {  // IntPair
                    return OrderedJson{x.first, x.second};
                }
            },
            v);
    }

    static std::string render_value(const FieldValue& v) {
        return std::visit(
            [](const auto& x) -> std::string {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, bool>) {
                    return x ? "yes" : "no";
                } else if constexpr (std::is_same_v<T, long long>) {
                    return std::to_string(x);
                } else if constexpr (std::is_same_v<T, BigRat>) {
                    std::string s = boost::multiprecision::numerator(x).str();
                    if (boost::multiprecision::denominator(x) == 1) return s;
                    s += "/" + boost::multiprecision::denominator(x).str();
                    return s + " = " + render_real(x.template convert_to<double>());
                } else if constexpr (std::is_same_v<T, double>) {
                    return render_real(x);
                } else if constexpr (std::is_same_v<T, std::string>) {
                    return x;
                } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
                    std::string s = "[";
                    for (std::size_t i = 0; i < x.size(); ++i)
                        s += (i ? ", " : "") + x[i];
                    return s + "]";
                } else if constexpr (std::is_same_v<T, std::vector<BigInt>>) {
                    std::string s = "[";
                    for (std::size_t i = 0; i < x.size(); ++i)
                        s += (i ? ", " : "") + x[i].str();
                    return s + "]";
                } else if constexpr (std::is_same_v<T, std::vector<IntPair>>) {
                    std::string s = "[";
                    for (std::size_t i = 0; i < x.size(); ++i)
                        s += std::string(i ? ", " : "") + "(" + std::to_string(x[i].first) +
                             ", " + std::to_string(x[i].second) + ")";
                    return s + "]";
                } else {  // IntPair
                    return "(" + std::to_string(x.first) + ", " + std::to_string(x.second) + ")";
                }
            },
            v);
    }

    static FieldValue decode_value(const OrderedJson& j) {
        if (j.is_boolean()) return j.get<bool>();
        if (j.is_number_integer()) return j.get<long long>();
        if (j.is_string()) return j.get<std::string>();
        if (j.is_object()) {
            if (!j.contains("num") || !j.contains("den"))
                throw ParseError("rational field must carry num and den");
            auto big = [](const OrderedJson& v) {
                return v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long long>());
            };
            return BigRat(big(j["num"]), big(j["den"]));
        }
        if (j.is_array()) {
            if (j.empty()) return std::vector<std::string>{};
            if (j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
                return IntPair{j[0].get<long long>(), j[1].get<long long>()};
            if (j[0].is_array()) {
                std::vector<IntPair> pairs;
                for (const auto& e : j) pairs.emplace_back(e[0].get<long long>(),
                                                           e[1].get<long long>());
                return pairs;
            }
            if (j[0].is_string()) {
                std::vector<std::string> strs;
                for (const auto& e : j) strs.push_back(e.get<std::string>());
                return strs;
            }
            std::vector<BigInt> ints;
            for (const auto& e : j)
                ints.push_back(e.is_string() ? BigInt(e.get<std::string>())
                                             : BigInt(e.get<long long>()));
            return ints;
        }
        throw ParseError("unsupported report field encoding");
    }

    std::string subject_;
    std::vector<ReportField> fields_;
    std::vector<std::string> notes_;
};

inline InvariantReport InvariantReport::from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("schema") || j["schema"] != 1)
        throw ParseError("report must be a schema-1 object");
    InvariantReport out(j.value("subject", std::string{}));
    const OrderedJson prov = j.value("provenance", OrderedJson::object());
    const OrderedJson cites = j.value("citations", OrderedJson::object());
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "schema" || key == "subject" || key == "provenance" || key == "citations" ||
            key == "notes")
            continue;
        if (!prov.contains(key)) throw ParseError("field '" + key + "' has no provenance tag");
        out.add(key, decode_value(it.value()), provenance_from_name(prov[key]),
                cites.contains(key) ? cites[key].get<std::string>() : std::string{});
    }
    for (const auto& n : j.value("notes", OrderedJson::array())) out.note(n.get<std::string>());
    return out;
}

}  // namespace curveinv
