#include "ucoh/circuit.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "ucoh/errors.hpp"
#include "ucoh/json_io.hpp"

namespace ucoh {

namespace {

struct Arg {
    enum class Kind { number, text } kind;
    double value = 0.0;
    bool integral = false;
    std::string text;
    int col = 0;
};

// Cursor over a single line; columns are 1-based.
class LineReader {
public:
    LineReader(std::string_view line, int number) : line_(line), number_(number) {}

    void skip_space() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    }
    bool done() const { return pos_ >= line_.size() || line_[pos_] == '#'; }
    char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }
    int col() const { return static_cast<int>(pos_) + 1; }
    void advance() { ++pos_; }

    [[noreturn]] void error(int col, const std::string& msg) const { throw SyntaxError(number_, col, msg); }

    std::string identifier() {
        const std::size_t start = pos_;
        while (pos_ < line_.size() && std::isalpha(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        return std::string(line_.substr(start, pos_ - start));
    }

    Arg argument(int open_col) {
        skip_space();
        Arg a;
        a.col = col();
        if (pos_ >= line_.size()) error(open_col, "unclosed '('");
        if (peek() == '"') {
            a.kind = Arg::Kind::text;
            const std::size_t close = line_.find('"', pos_ + 1);
            if (close == std::string_view::npos) error(a.col, "unterminated string literal");
            a.text = std::string(line_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            return a;
        }
        a.kind = Arg::Kind::number;
        const std::size_t start = pos_;
        while (pos_ < line_.size() && (std::isdigit(static_cast<unsigned char>(line_[pos_])) ||
                                       std::string_view("+-.eE").find(line_[pos_]) != std::string_view::npos))
            ++pos_;
        const std::string_view tok = line_.substr(start, pos_ - start);
        if (tok.empty()) error(a.col, "expected a number");
        const char* first = tok.data();
        if (*first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), a.value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(a.value))
            error(a.col, "malformed number '" + std::string(tok) + "'");
        a.integral = tok.find_first_of(".eE") == std::string_view::npos;
        return a;
    }

private:
    std::string_view line_;
    int number_;
    std::size_t pos_ = 0;
};

struct GateSpec {
    const char* name;
    int arity;
    int modes;   // leading arguments that are mode indices
    bool text;   // single string argument
};

constexpr GateSpec kSpecs[] = {
    {"D", 3, 1, false}, {"S", 3, 1, false}, {"BS", 4, 2, false}, {"R", 2, 1, false}, {"SYMP", 1, 0, true},
};

GateKind build(const GateSpec& spec, const std::vector<Arg>& args, const std::vector<int>& modes) {
    const std::string_view name = spec.name;
    if (name == "D") return Displace{modes[0], {args[1].value, args[2].value}};
    if (name == "S") return Squeeze{modes[0], args[1].value, args[2].value};
    if (name == "BS") return Beamsplitter{modes[0], modes[1], args[2].value, args[3].value};
    if (name == "R") return Rotate{modes[0], args[1].value};
    return RawSymplectic{args[0].text};
}

void parse_line(std::string_view line, int number, std::optional<int> dim, std::vector<Gate>& out) {
    LineReader rd(line, number);
    rd.skip_space();
    if (rd.done()) return;

    const int name_col = rd.col();
    const std::string name = rd.identifier();
    if (name.empty()) rd.error(name_col, "expected a gate name");
    const GateSpec* spec = nullptr;
    for (const auto& s : kSpecs)
        if (name == s.name) spec = &s;
    if (!spec) rd.error(name_col, "unknown gate '" + name + "'");

    rd.skip_space();
    const int open_col = rd.col();
    if (rd.peek() != '(') rd.error(open_col, "expected '(' after " + name);
    rd.advance();

    std::vector<Arg> args;
    rd.skip_space();
    if (rd.peek() == ')') {
        rd.advance();
    } else {
        while (true) {
            args.push_back(rd.argument(open_col));
            rd.skip_space();
            if (rd.peek() == ',') {
                rd.advance();
                continue;
            }
            if (rd.peek() == ')') {
                rd.advance();
                break;
            }
            if (rd.peek() == '\0') rd.error(open_col, "unclosed '('");
            rd.error(rd.col(), std::string("unexpected character '") + rd.peek() + "'");
        }
    }

    if (static_cast<int>(args.size()) != spec->arity)
        rd.error(open_col, name + " takes " + std::to_string(spec->arity) + " arguments, got " +
                               std::to_string(args.size()));
    std::vector<int> modes;
    for (int k = 0; k < spec->arity; ++k) {
        const Arg& a = args[static_cast<std::size_t>(k)];
        const bool want_text = spec->text;
        if (want_text != (a.kind == Arg::Kind::text))
            rd.error(a.col, want_text ? "expected a quoted file name" : "expected a number");
        if (k < spec->modes) {
            if (!a.integral || a.value < 0 || a.value > 1e6) rd.error(a.col, "mode must be a nonnegative integer");
            modes.push_back(static_cast<int>(a.value));
        }
    }
    if (spec->modes == 2 && modes[0] == modes[1]) rd.error(args[1].col, "beamsplitter modes must differ");
    if (dim)
        for (int m : modes)
            if (m >= *dim) throw ModeOutOfRange(number, m, *dim);

    rd.skip_space();
    if (rd.peek() == ';') rd.advance();
    rd.skip_space();
    if (!rd.done()) rd.error(rd.col(), "unexpected text after gate");

    out.push_back({build(*spec, args, modes), number});
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ComplexMatrix unit_with(int dim) { return ComplexMatrix::Identity(dim, dim); }

void require_mode(int mode, int dim, int line) {
    if (mode < 0 || mode >= dim) throw ModeOutOfRange(line, mode, dim);
}

}  // namespace

std::vector<Gate> parse(std::string_view text, std::optional<int> dim) {
    std::vector<Gate> gates;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        parse_line(line, ++number, dim, gates);
        start = end + 1;
    }
    return gates;
}

std::string to_text(const std::vector<Gate>& gates) {
    std::string out;
    for (const auto& g : gates) {
        std::visit(
            [&](const auto& k) {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Displace>)
                    out += "D(" + std::to_string(k.mode) + ", " + fmt(k.alpha.real()) + ", " + fmt(k.alpha.imag()) + ")";
                else if constexpr (std::is_same_v<T, Squeeze>)
                    out += "S(" + std::to_string(k.mode) + ", " + fmt(k.r) + ", " + fmt(k.phi) + ")";
                else if constexpr (std::is_same_v<T, Beamsplitter>)
                    out += "BS(" + std::to_string(k.mode1) + ", " + std::to_string(k.mode2) + ", " + fmt(k.theta) +
                           ", " + fmt(k.phi) + ")";
                else if constexpr (std::is_same_v<T, Rotate>)
                    out += "R(" + std::to_string(k.mode) + ", " + fmt(k.theta) + ")";
                else
                    out += "SYMP(\"" + k.source + "\")";
            },
            g.kind);
        out += '\n';
    }
    return out;
}

int required_dim(const std::vector<Gate>& gates) {
    int d = 0;
    for (const auto& g : gates) {
        std::visit(
            [&](const auto& k) {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Beamsplitter>)
                    d = std::max({d, k.mode1 + 1, k.mode2 + 1});
                else if constexpr (!std::is_same_v<T, RawSymplectic>)
                    d = std::max(d, k.mode + 1);
            },
            g.kind);
    }
    return d;
}

SymplecticElement gate_element(const Gate& gate, int dim, const std::filesystem::path& base_dir) {
    return std::visit(
        [&](const auto& k) -> SymplecticElement {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Displace>) {
                throw Error("gate_element: displacements are not symplectic gates");
            } else if constexpr (std::is_same_v<T, Squeeze>) {
                require_mode(k.mode, dim, gate.line);
                ComplexMatrix u = unit_with(dim);
                ComplexMatrix v = ComplexMatrix::Zero(dim, dim);
                u(k.mode, k.mode) = std::cosh(k.r);
                v(k.mode, k.mode) = std::polar(std::sinh(k.r), k.phi);
                return make_symplectic(std::move(u), std::move(v));
            } else if constexpr (std::is_same_v<T, Beamsplitter>) {
                require_mode(k.mode1, dim, gate.line);
                require_mode(k.mode2, dim, gate.line);
                ComplexMatrix u = unit_with(dim);
                const double c = std::cos(k.theta);
                const double s = std::sin(k.theta);
                u(k.mode1, k.mode1) = c;
                u(k.mode2, k.mode2) = c;
                u(k.mode1, k.mode2) = -std::polar(s, -k.phi);
                u(k.mode2, k.mode1) = std::polar(s, k.phi);
                return from_unitary(u);
            } else if constexpr (std::is_same_v<T, Rotate>) {
                require_mode(k.mode, dim, gate.line);
                ComplexMatrix u = unit_with(dim);
                u(k.mode, k.mode) = std::polar(1.0, k.theta);
                return from_unitary(u);
            } else {
                SymplecticElement r = symplectic_from_json(read_json_file(base_dir / k.source));
                if (r.dim() != dim)
                    throw DimensionMismatch("SYMP(\"" + k.source + "\") has dimension " + std::to_string(r.dim()) +
                                            ", circuit has " + std::to_string(dim));
                return r;
            }
        },
        gate.kind);
}

CompiledCircuit compile(const std::vector<Gate>& gates, int dim, const std::filesystem::path& base_dir) {
    if (dim < 1) throw DimensionMismatch("compile: dimension must be positive");
    CompiledCircuit c{ComplexVector::Zero(dim), identity(dim), {}};
    for (const auto& g : gates) {
        if (const auto* d = std::get_if<Displace>(&g.kind)) {
            require_mode(d->mode, dim, g.line);
            ComplexVector h = ComplexVector::Zero(dim);
            h(d->mode) = d->alpha;
            // W(h') W(h) = exp(-i omega(h', h)) W(h' + h)
            c.log_phase += LogComplex{0.0, -symplectic_form(h, c.h)};
            c.h = h + c.h;
        } else {
            const SymplecticElement r = gate_element(g, dim, base_dir);
            // T(R') W(h) T(R) = W(R'h) T(R') T(R) = chi(R', R) W(R'h) T(R'R)
            c.h = ucoh::apply(r, c.h);
            c.log_phase += multiplier(r, c.R).log;
            c.R = compose(r, c.R);
        }
    }
    return c;
}

UltracoherentState run(const CompiledCircuit& c) {
    return scaled(weyl_apply(c.h, act(c.R, vacuum(c.h.size()))), c.log_phase);
}

UltracoherentState apply_sequential(const std::vector<Gate>& gates, int dim, const std::filesystem::path& base_dir) {
    UltracoherentState x = vacuum(dim);
    for (const auto& g : gates) {
        if (const auto* d = std::get_if<Displace>(&g.kind)) {
            require_mode(d->mode, dim, g.line);
            ComplexVector h = ComplexVector::Zero(dim);
            h(d->mode) = d->alpha;
            x = weyl_apply(h, x);
        } else {
            x = act(gate_element(g, dim, base_dir), x);
        }
    }
    return x;
}

std::vector<Gate> inverse_gates(const std::vector<Gate>& gates) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        GateKind inv = std::visit(
            [](const auto& k) -> GateKind {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Displace>)
                    return Displace{k.mode, -k.alpha};
                else if constexpr (std::is_same_v<T, Squeeze>)
                    return Squeeze{k.mode, -k.r, k.phi};
                else if constexpr (std::is_same_v<T, Beamsplitter>)
                    return Beamsplitter{k.mode1, k.mode2, -k.theta, k.phi};
                else if constexpr (std::is_same_v<T, Rotate>)
                    return Rotate{k.mode, -k.theta};
                else
                    throw Error("inverse_gates: SYMP gates have no textual inverse");
            },
            it->kind);
        out.push_back({std::move(inv), it->line});
    }
    return out;
}

}  // namespace ucoh
