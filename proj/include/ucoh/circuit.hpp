#pragma once

// A line-oriented gate language compiled to the normal form
// exp(log_phase) W(h) T(R) acting on the vacuum.
//
//   circuit := { line }
//   line    := [ gate "(" args ")" [ ";" ] ] [ "#" comment ]
//   gate    := "D" | "S" | "BS" | "R" | "SYMP"
//
//   D(mode, re, im)            displacement by (re + i im) e_mode
//   S(mode, r, phi)            U_mm = cosh r, V_mm = e^{i phi} sinh r
//   BS(i, j, theta, phi)       K_ii = K_jj = cos theta, K_ij = -e^{-i phi} sin theta,
//                              K_ji = e^{i phi} sin theta
//   R(mode, theta)             K_mm = e^{i theta}
//   SYMP("file.json")          symplectic element read from a JSON file

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ucoh/representation.hpp"

namespace ucoh {

struct Displace {
    int mode;
    cplx alpha;
    bool operator==(const Displace&) const = default;
};

struct Squeeze {
    int mode;
    double r;
    double phi;
    bool operator==(const Squeeze&) const = default;
};

struct Beamsplitter {
    int mode1;
    int mode2;
    double theta;
    double phi;
    bool operator==(const Beamsplitter&) const = default;
};

struct Rotate {
    int mode;
    double theta;
    bool operator==(const Rotate&) const = default;
};

struct RawSymplectic {
    std::string source;
    bool operator==(const RawSymplectic&) const = default;
};

using GateKind = std::variant<Displace, Squeeze, Beamsplitter, Rotate, RawSymplectic>;

struct Gate {
    GateKind kind;
    int line = 0;

    bool operator==(const Gate& o) const { return kind == o.kind; }
};

/// Throws SyntaxError, or ModeOutOfRange when dim is given and exceeded.
std::vector<Gate> parse(std::string_view text, std::optional<int> dim = std::nullopt);

/// One gate per line; reals printed with 17 significant digits.
std::string to_text(const std::vector<Gate>& gates);

/// Smallest dimension covering every mode index (raw elements excluded).
int required_dim(const std::vector<Gate>& gates);

struct CompiledCircuit {
    ComplexVector h;
    SymplecticElement R;
    LogComplex log_phase;
};

/// The symplectic element of a non-displacement gate. SYMP paths are
/// resolved against base_dir.
SymplecticElement gate_element(const Gate& gate, int dim, const std::filesystem::path& base_dir = {});

CompiledCircuit compile(const std::vector<Gate>& gates, int dim, const std::filesystem::path& base_dir = {});

/// exp(log_phase) W(h) T(R) vacuum.
UltracoherentState run(const CompiledCircuit& c);

/// Gates applied one at a time to the vacuum.
UltracoherentState apply_sequential(const std::vector<Gate>& gates, int dim,
                                    const std::filesystem::path& base_dir = {});

/// Reversed sequence of inverse gates; throws Error on SYMP gates.
std::vector<Gate> inverse_gates(const std::vector<Gate>& gates);

}  // namespace ucoh
