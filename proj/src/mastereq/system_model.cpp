#include "tlagauge/mastereq/system_model.hpp"

#include <cmath>
#include <random>
#include <string>

#include "tlagauge/errors.hpp"

namespace tlagauge {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b)
{
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Embeds a single-factor operator at position `slot` (0 = TLA).
Eigen::MatrixXcd embed(const std::vector<int>& dims, std::size_t slot, const Eigen::MatrixXcd& op)
{
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t f = 0; f < dims.size(); ++f) {
        out = kron(out, f == slot ? op : Eigen::MatrixXcd::Identity(dims[f], dims[f]));
    }
    return out;
}

Eigen::MatrixXcd local_lowering(int levels)
{
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(levels, levels);
    for (int n = 1; n < levels; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

Eigen::MatrixXcd random_hermitian(Eigen::Index n, double scale, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = std::complex<double>(re, im);
        }
    }
    return 0.5 * scale * (g + g.adjoint());
}

} // namespace

SystemModel build_system(const TlaParams& tla, const std::vector<AuxMode>& aux, const CouplingSpec& v_spec,
                         std::size_t dim_cap)
{
    SystemModel m{tla, aux, v_spec, {}, {}, {}, {2}, 2};
    for (std::size_t j = 0; j < aux.size(); ++j) {
        if (!(aux[j].omega > 0.0)) {
            throw_validation("aux mode " + std::to_string(j) + " needs a positive frequency");
        }
        if (aux[j].kind == AuxKind::Oscillator && aux[j].truncation < 1) {
            throw_validation("aux oscillator " + std::to_string(j) + " needs truncation >= 1");
        }
        m.factor_dims.push_back(aux[j].levels());
        m.dim *= static_cast<std::size_t>(aux[j].levels());
        if (m.dim > dim_cap) {
            throw_validation("system dimension exceeds cap " + std::to_string(dim_cap));
        }
    }
    const auto n = static_cast<Eigen::Index>(m.dim);

    m.h0 = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd tla_number = Eigen::MatrixXcd::Zero(2, 2);
    tla_number(1, 1) = 1.0;
    m.h0 += tla.omega0() * embed(m.factor_dims, 0, tla_number);
    for (std::size_t j = 0; j < aux.size(); ++j) {
        const Eigen::MatrixXcd a = local_lowering(aux[j].levels());
        m.h0 += aux[j].omega * embed(m.factor_dims, j + 1, a.adjoint() * a);
    }

    m.v = std::visit(
        Overloaded{
            [&](const NoCoupling&) -> Eigen::MatrixXcd { return Eigen::MatrixXcd::Zero(n, n); },
            [&](const ExchangeSpec& spec) -> Eigen::MatrixXcd {
                Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n, n);
                Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(2, 2);
                sp(1, 0) = 1.0;
                const Eigen::MatrixXcd sigma_plus = embed(m.factor_dims, 0, sp);
                for (const ExchangeCoupling& term : spec.terms) {
                    if (term.aux < 0 || term.aux >= static_cast<int>(aux.size())) {
                        throw_validation("exchange coupling names missing aux mode " + std::to_string(term.aux));
                    }
                    const Eigen::MatrixXcd a = aux_lowering(m, term.aux);
                    const Eigen::MatrixXcd x = sigma_plus * a;
                    v += term.g * (x + x.adjoint());
                }
                return v;
            },
            [&](const GeneralHermitianSpec& spec) -> Eigen::MatrixXcd {
                if (spec.matrix.rows() != n || spec.matrix.cols() != n) {
                    throw_validation("general coupling matrix must be " + std::to_string(n) + "x" +
                                     std::to_string(n));
                }
                const double defect = (spec.matrix - spec.matrix.adjoint()).cwiseAbs().maxCoeff();
                if (defect > 1e-12 * std::max(1.0, spec.matrix.cwiseAbs().maxCoeff())) {
                    throw_validation("general coupling matrix is not Hermitian");
                }
                return 0.5 * (spec.matrix + spec.matrix.adjoint());
            },
            [&](const RandomHermitianSpec& spec) -> Eigen::MatrixXcd {
                std::mt19937_64 rng(spec.seed);
                if (spec.structure == RandomStructure::Full) {
                    return random_hermitian(n, spec.scale, rng);
                }
                const Eigen::MatrixXcd r = random_hermitian(n / 2, spec.scale, rng);
                return kron(Eigen::MatrixXcd::Identity(2, 2), r);
            },
        },
        v_spec);
    m.hs = m.h0 + m.v;
    return m;
}

Eigen::MatrixXcd tla_operator(const SystemModel& model, const Eigen::Matrix2cd& a)
{
    return embed(model.factor_dims, 0, a);
}

Eigen::MatrixXcd aux_lowering(const SystemModel& model, int j)
{
    const auto slot = static_cast<std::size_t>(j) + 1;
    return embed(model.factor_dims, slot, local_lowering(model.factor_dims.at(slot)));
}

Eigen::MatrixXcd aux_top_projector(const SystemModel& model, int j)
{
    const auto slot = static_cast<std::size_t>(j) + 1;
    const int levels = model.factor_dims.at(slot);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(levels, levels);
    p(levels - 1, levels - 1) = 1.0;
    return embed(model.factor_dims, slot, p);
}

std::size_t product_index(const SystemModel& model, int tla, const std::vector<int>& aux_levels)
{
    if (aux_levels.size() != model.aux.size()) {
        throw_validation("product index needs one level per aux mode");
    }
    std::size_t idx = static_cast<std::size_t>(tla);
    for (std::size_t j = 0; j < aux_levels.size(); ++j) {
        idx = idx * static_cast<std::size_t>(model.factor_dims[j + 1]) + static_cast<std::size_t>(aux_levels[j]);
    }
    return idx;
}

} // namespace tlagauge
