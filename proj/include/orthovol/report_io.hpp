#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "orthovol/bm_limits.hpp"
#include "orthovol/cone_measures.hpp"
#include "orthovol/intrinsic_volumes.hpp"
#include "orthovol/sangwine_yager.hpp"

namespace orthovol {

/// Formats a double with 17 significant digits (round-trip safe). All
/// report serialization goes through here so output is byte-stable.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

/// Minimal streaming JSON writer; tracks commas so callers just push keys
/// and values in order. Key order is part of the frozen output format.
class JsonWriter {
public:
    std::string take() { return std::move(out_); }

    JsonWriter& begin_object() { return open('{'); }
    JsonWriter& end_object() { return close('}'); }
    JsonWriter& begin_array() { return open('['); }
    JsonWriter& end_array() { return close(']'); }

    JsonWriter& key(const std::string& k) {
        comma();
        out_ += '"';
        out_ += json_escape(k);
        out_ += "\":";
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(double v) { return raw(format_double(v)); }
    JsonWriter& value(int v) { return raw(std::to_string(v)); }
    JsonWriter& value(std::int64_t v) { return raw(std::to_string(v)); }
    JsonWriter& value(std::uint64_t v) { return raw(std::to_string(v)); }
    JsonWriter& value(bool v) { return raw(v ? "true" : "false"); }
    JsonWriter& value(const std::string& v) { return raw('"' + json_escape(v) + '"'); }
    JsonWriter& value(const char* v) { return value(std::string(v)); }

private:
    JsonWriter& open(char c) {
        comma();
        out_ += c;
        fresh_ = true;
        pending_value_ = false;
        return *this;
    }
    JsonWriter& close(char c) {
        out_ += c;
        fresh_ = false;
        return *this;
    }
    JsonWriter& raw(const std::string& s) {
        comma();
        out_ += s;
        pending_value_ = false;
        return *this;
    }
    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;  // value directly after its key
        }
        if (!fresh_ && !out_.empty()) {
            char last = out_.back();
            if (last != '{' && last != '[') out_ += ',';
        }
        fresh_ = false;
    }

    std::string out_;
    bool fresh_ = true;
    bool pending_value_ = false;
};

/// RFC-4180-style CSV: CRLF line endings, fields quoted when they contain
/// commas, quotes, or newlines (face index sets always do).
class CsvWriter {
public:
    CsvWriter& field(const std::string& s) {
        if (col_++) out_ += ',';
        bool needs_quote = s.find_first_of(",\"\r\n") != std::string::npos;
        if (!needs_quote) {
            out_ += s;
        } else {
            out_ += '"';
            for (char c : s) {
                if (c == '"') out_ += '"';
                out_ += c;
            }
            out_ += '"';
        }
        return *this;
    }
    CsvWriter& field(const char* s) { return field(std::string(s)); }
    CsvWriter& field(double v) { return field(format_double(v)); }
    CsvWriter& field(int v) { return field(std::to_string(v)); }
    CsvWriter& field(std::int64_t v) { return field(std::to_string(v)); }
    CsvWriter& field(std::uint64_t v) { return field(std::to_string(v)); }
    CsvWriter& field(bool v) { return field(std::string(v ? "true" : "false")); }
    CsvWriter& endrow() {
        out_ += "\r\n";
        col_ = 0;
        return *this;
    }
    std::string take() { return std::move(out_); }

private:
    std::string out_;
    int col_ = 0;
};

// ---------------------------------------------------------------------------
// report serializers (formats documented in docs/formats.md)
// ---------------------------------------------------------------------------

inline std::string iv_all_json(const IntrinsicVolumes& iv) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("iv");
    w.key("n").value(iv.n);
    w.key("method").value(to_string(iv.method));
    w.key("values").begin_array();
    for (double v : iv.values) w.value(v);
    w.end_array();
    w.end_object();
    std::string s = w.take();
    s += '\n';
    return s;
}

inline std::string iv_single_json(int n, int k, VolumeMethod method, double value) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("iv");
    w.key("n").value(n);
    w.key("k").value(k);
    w.key("method").value(to_string(method));
    w.key("value").value(value);
    w.end_object();
    std::string s = w.take();
    s += '\n';
    return s;
}

inline std::string iv_all_csv(const IntrinsicVolumes& iv) {
    CsvWriter w;
    w.field("n").field("k").field("method").field("value").endrow();
    for (int k = 0; k <= iv.n; ++k)
        w.field(iv.n).field(k).field(std::string(to_string(iv.method))).field(iv.values[k]).endrow();
    return w.take();
}

inline std::string iv_single_csv(int n, int k, VolumeMethod method, double value) {
    CsvWriter w;
    w.field("n").field("k").field("method").field("value").endrow();
    w.field(n).field(k).field(std::string(to_string(method))).field(value).endrow();
    return w.take();
}

inline std::string gauss_json(const GaussRunReport& rep) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("gauss");
    w.key("n").value(rep.n);
    w.key("samples").value(rep.samples);
    w.key("seed").value(rep.seed);
    w.key("chunk_samples").value(rep.chunk_samples);
    w.key("faces").begin_array();
    for (const auto& [face, est] : rep.estimates) {
        w.begin_object();
        w.key("face").value(face.to_string());
        w.key("k").value(face.k());
        w.key("gamma_hat").value(est.gamma_hat);
        w.key("std_error").value(est.std_error);
        w.end_object();
    }
    w.end_array();
    w.key("mcmullen").begin_array();
    for (const McmullenRow& row : rep.assembled) {
        w.begin_object();
        w.key("k").value(row.k);
        w.key("v_mc").value(row.v_mc);
        w.key("std_error").value(row.std_error);
        w.key("v_exact").value(row.v_exact);
        w.key("delta").value(row.delta);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    std::string s = w.take();
    s += '\n';
    return s;
}

inline std::string gauss_csv(const GaussRunReport& rep) {
    CsvWriter w;
    w.field("record").field("face").field("k").field("gamma_hat").field("std_error")
        .field("v_mc").field("v_exact").field("delta").endrow();
    for (const auto& [face, est] : rep.estimates) {
        w.field("face").field(face.to_string()).field(face.k()).field(est.gamma_hat)
            .field(est.std_error).field("").field("").field("").endrow();
    }
    for (const McmullenRow& row : rep.assembled) {
        w.field("mcmullen").field("").field(row.k).field("").field(row.std_error)
            .field(row.v_mc).field(row.v_exact).field(row.delta).endrow();
    }
    return w.take();
}

inline std::string euler_json(double gamma) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("euler");
    w.key("gamma").value(gamma);
    w.key("gaussian_measure").value(gamma / (4.0 * kPi));
    w.end_object();
    std::string s = w.take();
    s += '\n';
    return s;
}

inline std::string euler_csv(double gamma) {
    CsvWriter w;
    w.field("gamma").field("gaussian_measure").endrow();
    w.field(gamma).field(gamma / (4.0 * kPi)).endrow();
    return w.take();
}

inline std::string sy_json(const SYReport& rep, double imag_threshold, double slack) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("sy");
    w.key("n").value(rep.n);
    w.key("coefficients").begin_array();
    for (double c : rep.coefficients) w.value(c);
    w.end_array();
    w.key("roots").begin_array();
    for (const Complex& z : rep.roots) {
        w.begin_object();
        w.key("re").value(z.real());
        w.key("im").value(z.imag());
        w.end_object();
    }
    w.end_array();
    w.key("max_imag_rel").value(rep.max_imag_rel);
    w.key("inradius").value(rep.r);
    w.key("circumradius").value(rep.big_r);
    w.key("imag_threshold").value(imag_threshold);
    w.key("slack").value(slack);
    w.key("pass_bracket").value(rep.pass_bracket);
    w.key("pass_real").value(rep.pass_real);
    w.end_object();
    std::string s = w.take();
    s += '\n';
    return s;
}

inline std::string sy_csv(const SYReport& rep) {
    CsvWriter w;
    w.field("n").field("index").field("coefficient").field("root_re").field("root_im")
        .field("inradius").field("circumradius").field("max_imag_rel")
        .field("pass_bracket").field("pass_real").endrow();
    for (int i = 0; i <= rep.n; ++i) {
        w.field(rep.n).field(i).field(rep.coefficients[i]);
        if (i < rep.n) {
            w.field(rep.roots[i].real()).field(rep.roots[i].imag());
        } else {
            w.field("").field("");
        }
        if (i == 0) {
            w.field(rep.r).field(rep.big_r).field(rep.max_imag_rel)
                .field(rep.pass_bracket).field(rep.pass_real);
        } else {
            w.field("").field("").field("").field("").field("");
        }
        w.endrow();
    }
    return w.take();
}

struct LimitRow {
    int n = 0;
    double scaled_sum = 0.0;
    double omega_k = 0.0;
    double rel_error = 0.0;
};

inline std::string limit_json(int k, const std::vector<LimitRow>& rows) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("limit");
    w.key("k").value(k);
    w.key("rows").begin_array();
    for (const LimitRow& r : rows) {
        w.begin_object();
        w.key("n").value(r.n);
        w.key("scaled_sum").value(r.scaled_sum);
        w.key("omega_k").value(r.omega_k);
        w.key("rel_error").value(r.rel_error);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    std::string s = w.take();
    s += '\n';
    return s;
}

inline std::string limit_csv(int k, const std::vector<LimitRow>& rows) {
    CsvWriter w;
    w.field("k").field("n").field("scaled_sum").field("omega_k").field("rel_error").endrow();
    for (const LimitRow& r : rows)
        w.field(k).field(r.n).field(r.scaled_sum).field(r.omega_k).field(r.rel_error).endrow();
    return w.take();
}

inline std::string mk_json(const std::vector<BMVolumeRow>& rows) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("mk");
    w.key("k_max").value(rows.empty() ? 0 : rows.back().k);
    w.key("rows").begin_array();
    for (const BMVolumeRow& r : rows) {
        w.begin_object();
        w.key("k").value(r.k);
        w.key("omega_k").value(r.omega_k);
        w.key("v_k").value(r.v_k);
        w.key("m_k").value(r.m_k);
        w.key("m_k_scaled").value(r.m_k_scaled);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    std::string s = w.take();
    s += '\n';
    return s;
}

inline std::string mk_csv(const std::vector<BMVolumeRow>& rows) {
    CsvWriter w;
    w.field("k").field("omega_k").field("v_k").field("m_k").field("m_k_scaled").endrow();
    for (const BMVolumeRow& r : rows)
        w.field(r.k).field(r.omega_k).field(r.v_k).field(r.m_k).field(r.m_k_scaled).endrow();
    return w.take();
}

}  // namespace orthovol
