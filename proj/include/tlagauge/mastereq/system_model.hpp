// system_model.hpp: two-level atom plus auxiliary excitations, H_S = H_0 + V

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "tlagauge/core/physics.hpp"

namespace tlagauge {

enum class AuxKind { TwoLevel, Oscillator };

struct AuxMode {
    double omega = 1.0;
    AuxKind kind = AuxKind::TwoLevel;
    int truncation = 1; // highest retained excitation; TwoLevel always 1

    int levels() const noexcept { return kind == AuxKind::TwoLevel ? 2 : truncation + 1; }
};

struct ExchangeCoupling {
    int aux = 0;       // index into the aux list
    double g = 0.0;    // g (sigma_plus A_j + A_j^dag sigma_minus)
};

struct NoCoupling {};

struct ExchangeSpec {
    std::vector<ExchangeCoupling> terms;
};

struct GeneralHermitianSpec {
    Eigen::MatrixXcd matrix; // full system dimension, TLA factor first
};

enum class RandomStructure {
    Full,    // arbitrary Hermitian on the whole space
    AuxOnly, // identity on the TLA, random on the auxiliaries
};

struct RandomHermitianSpec {
    std::uint64_t seed = 0;
    double scale = 0.1;
    RandomStructure structure = RandomStructure::Full;
};

using CouplingSpec = std::variant<NoCoupling, ExchangeSpec, GeneralHermitianSpec, RandomHermitianSpec>;

inline constexpr std::size_t kDefaultDimCap = 4096;

// Product basis |tla> (x) |aux_0> (x) ..., TLA first with 0 = ground. Only the
// TLA couples to the radiation reservoir.
struct SystemModel {
    TlaParams tla;
    std::vector<AuxMode> aux;
    CouplingSpec v_spec;
    Eigen::MatrixXcd h0;
    Eigen::MatrixXcd v;
    Eigen::MatrixXcd hs;
    std::vector<int> factor_dims;
    std::size_t dim = 0;
};

// Throws ValidationError for a non-Hermitian or wrongly sized general V, an
// exchange term naming a missing aux mode, nonpositive aux frequencies or
// truncations, and a dimension above dim_cap.
SystemModel build_system(const TlaParams& tla, const std::vector<AuxMode>& aux, const CouplingSpec& v_spec,
                         std::size_t dim_cap = kDefaultDimCap);

// A (x) I on the full space for a 2x2 TLA operator.
Eigen::MatrixXcd tla_operator(const SystemModel& model, const Eigen::Matrix2cd& a);

// Lowering operator of aux mode j on the full space.
Eigen::MatrixXcd aux_lowering(const SystemModel& model, int j);

// Projector onto the top retained level of aux mode j.
Eigen::MatrixXcd aux_top_projector(const SystemModel& model, int j);

// Product-basis index of |tla> (x) |n_0> (x) ...
std::size_t product_index(const SystemModel& model, int tla, const std::vector<int>& aux_levels);

} // namespace tlagauge
