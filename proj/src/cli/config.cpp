#include "tlagauge/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace tlagauge {

namespace {

std::string locate(const std::string& source, const YAML::Node& node)
{
    const YAML::Mark m = node.Mark();
    if (m.is_null()) {
        return source + ": (override)";
    }
    return source + ":" + std::to_string(m.line + 1) + ":" + std::to_string(m.column + 1);
}

[[noreturn]] void fail(const std::string& source, const YAML::Node& node, const std::string& key,
                       const std::string& message)
{
    throw SchemaError(locate(source, node) + ": " + key + ": " + message);
}

// A mapping whose keys are consumed one by one; finish() rejects leftovers.
class Section {
public:
    Section(const YAML::Node& node, std::string path, const std::string& source)
        : node_(node), path_(std::move(path)), source_(source)
    {
        if (!node_.IsMap()) {
            fail(source_, node_, path_.empty() ? "document" : path_, "expected a mapping");
        }
    }

    std::string key(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }

    bool has(const std::string& k)
    {
        allowed_.insert(k);
        return static_cast<bool>(child(k));
    }

    YAML::Node node(const std::string& k)
    {
        allowed_.insert(k);
        return child(k);
    }

    const YAML::Node& self() const { return node_; }
    const std::string& source() const { return source_; }

    template <class T>
    T as(const YAML::Node& n, const std::string& k) const
    {
        if (!n.IsScalar()) {
            fail(source_, n, k, "expected a scalar");
        }
        try {
            return n.as<T>();
        } catch (const YAML::BadConversion&) {
            fail(source_, n, k, "cannot read '" + n.Scalar() + "' as the expected type");
        }
    }

    template <class T>
    T get(const std::string& k, T fallback)
    {
        const YAML::Node n = node(k);
        return n ? as<T>(n, key(k)) : fallback;
    }

    template <class T>
    T require(const std::string& k)
    {
        const YAML::Node n = node(k);
        if (!n) {
            fail(source_, node_, key(k), "required key is missing");
        }
        return as<T>(n, key(k));
    }

    double positive(const std::string& k, double fallback)
    {
        const double v = get<double>(k, fallback);
        if (!(v > 0.0) || !std::isfinite(v)) {
            fail(source_, at(k), key(k), "must be a positive finite number");
        }
        return v;
    }

    double nonnegative(const std::string& k, double fallback)
    {
        const double v = get<double>(k, fallback);
        if (!(v >= 0.0) || !std::isfinite(v)) {
            fail(source_, at(k), key(k), "must be a nonnegative finite number");
        }
        return v;
    }

    std::vector<double> numbers(const std::string& k)
    {
        const YAML::Node n = node(k);
        std::vector<double> out;
        if (!n) {
            return out;
        }
        if (!n.IsSequence()) {
            fail(source_, n, key(k), "expected a list of numbers");
        }
        for (const YAML::Node& e : n) {
            out.push_back(as<double>(e, key(k)));
        }
        return out;
    }

    YAML::Node at(const std::string& k) const { return child(k) ? child(k) : node_; }

    [[noreturn]] void error(const std::string& k, const std::string& message) const
    {
        fail(source_, at(k), key(k), message);
    }

    void finish() const
    {
        for (const auto& kv : node_) {
            const std::string k = kv.first.as<std::string>();
            if (!allowed_.count(k)) {
                fail(source_, kv.first, key(k), "unknown key");
            }
        }
    }

private:
    YAML::Node child(const std::string& k) const
    {
        const YAML::Node& n = node_;
        return n[k];
    }

    YAML::Node node_;
    std::string path_;
    std::string source_;
    std::set<std::string> allowed_;
};

template <class E>
E choose(Section& s, const std::string& k, const std::vector<std::pair<std::string, E>>& options, E fallback)
{
    if (!s.has(k)) {
        return fallback;
    }
    const std::string v = s.as<std::string>(s.node(k), s.key(k));
    std::string names;
    for (const auto& [name, value] : options) {
        if (name == v) {
            return value;
        }
        names += (names.empty() ? "" : ", ") + name;
    }
    s.error(k, "unknown value '" + v + "' (expected one of " + names + ")");
}

Band parse_band(Section& s, const std::string& k, Band fallback)
{
    if (!s.has(k)) {
        return fallback;
    }
    const std::vector<double> v = s.numbers(k);
    if (v.size() != 2) {
        s.error(k, "expected [lo, hi]");
    }
    if (!(v[0] > 0.0)) {
        s.error(k, "band must lie inside omega > 0");
    }
    if (!(v[1] > v[0])) {
        s.error(k, "band upper edge must exceed the lower edge");
    }
    return {v[0], v[1]};
}

SpectralKind parse_density(Section& parent, const std::string& k)
{
    if (!parent.has(k)) {
        return FreeSpaceCubic{};
    }
    Section s(parent.node(k), parent.key(k), parent.source());
    const std::string kind = s.get<std::string>("kind", "free-space");
    SpectralKind out = FreeSpaceCubic{};
    if (kind == "free-space") {
        out = FreeSpaceCubic{};
    } else if (kind == "power-law") {
        out = PowerLaw{s.get<double>("exponent", 0.0)};
    } else if (kind == "tabulated") {
        Tabulated t;
        const YAML::Node samples = s.node("samples");
        if (!samples || !samples.IsSequence() || samples.size() == 0) {
            s.error("samples", "expected a nonempty list of [omega, rate] pairs");
        }
        for (const YAML::Node& row : samples) {
            if (!row.IsSequence() || row.size() != 2) {
                fail(s.source(), row, s.key("samples"), "expected [omega, rate]");
            }
            t.samples.emplace_back(s.as<double>(row[0], s.key("samples")), s.as<double>(row[1], s.key("samples")));
        }
        out = t;
    } else {
        s.error("kind", "unknown spectral density '" + kind + "' (expected free-space, power-law, tabulated)");
    }
    s.finish();
    return out;
}

GaugeConfig parse_gauge(Section& parent, const std::string& k, GaugeKind fallback)
{
    GaugeConfig g;
    g.gauge.kind = fallback;
    if (!parent.has(k)) {
        return g;
    }
    Section s(parent.node(k), parent.key(k), parent.source());
    if (s.has("kind")) {
        const std::string name = s.as<std::string>(s.node("kind"), s.key("kind"));
        try {
            g.gauge.kind = parse_gauge_kind(name);
        } catch (const Error&) {
            s.error("kind", "unknown gauge '" + name + "' (expected dipole, naive-coulomb, corrected-coulomb, milonni)");
        }
    }
    g.gauge.expansion_order = s.get<int>("expansion_order", 2);
    if (g.gauge.kind != GaugeKind::CorrectedCoulomb && s.has("expansion_order")) {
        s.error("expansion_order", "only meaningful for corrected-coulomb");
    }
    g.options.rwa = s.get<bool>("rwa", false);
    if (s.has("xi0")) {
        g.options.xi0 = s.nonnegative("xi0", 0.0);
    }
    g.options.compensate_shift = s.get<bool>("compensate_shift", true);
    s.finish();
    return g;
}

void parse_tla(Section& root, ExperimentConfig& c)
{
    if (!root.has("tla")) {
        return;
    }
    Section s(root.node("tla"), "tla", root.source());
    const double w0 = s.positive("omega0", 1.0);
    if (s.has("gamma0") && s.has("dipole")) {
        s.error("dipole", "give either gamma0 or dipole, not both");
    }
    if (s.has("dipole")) {
        c.tla = TlaParams(w0, s.positive("dipole", 1.0));
    } else {
        c.tla = TlaParams::from_decay_rate(w0, s.positive("gamma0", 0.02));
    }
    s.finish();
}

void parse_bath(Section& root, ExperimentConfig& c)
{
    if (!root.has("bath")) {
        return;
    }
    Section s(root.node("bath"), "bath", root.source());
    const int modes = s.get<int>("modes", 2000);
    if (modes < 2) {
        s.error("modes", "need at least 2 modes");
    }
    c.bath.modes = static_cast<std::size_t>(modes);
    c.bath.band = parse_band(s, "band", c.bath.band);
    c.bath.rule = choose<QuadratureRule>(
        s, "rule", {{"uniform", QuadratureRule::UniformGrid}, {"gauss-legendre", QuadratureRule::GaussLegendre}},
        QuadratureRule::UniformGrid);
    c.bath.density = parse_density(s, "spectral_density");
    s.finish();
}

void parse_emission(Section& root, ExperimentConfig& c)
{
    if (!root.has("emission")) {
        return;
    }
    Section s(root.node("emission"), "emission", root.source());
    EmissionConfig& e = c.emission;
    e.max_photons = s.get<int>("max_photons", 1);
    if (e.max_photons != 1 && e.max_photons != 2) {
        s.error("max_photons", "must be 1 or 2");
    }
    e.initial_state = choose<InitialState>(
        s, "initial_state",
        {{"auto", InitialState::Auto}, {"bare", InitialState::Bare}, {"dressed", InitialState::Dressed}},
        InitialState::Auto);
    e.t_final = s.nonnegative("t_final", 0.0);
    e.survival_times = s.numbers("survival_times");
    for (double t : e.survival_times) {
        if (!(t >= 0.0)) {
            s.error("survival_times", "times must be nonnegative");
        }
    }
    e.subtract_baseline = s.get<bool>("subtract_baseline", true);
    e.propagator.tol = s.positive("tolerance", 1e-10);
    e.propagator.krylov_dim = s.get<int>("krylov_dim", 30);
    if (e.propagator.krylov_dim < 2) {
        s.error("krylov_dim", "must be at least 2");
    }
    e.propagator.max_step = s.nonnegative("max_step", 0.0);
    s.finish();
}

void parse_lineshape(Section& root, ExperimentConfig& c)
{
    if (!root.has("lineshape")) {
        return;
    }
    Section s(root.node("lineshape"), "lineshape", root.source());
    const int points = s.get<int>("points", 10000);
    if (points < 2) {
        s.error("points", "need at least 2 points");
    }
    c.lineshape.points = static_cast<std::size_t>(points);
    c.lineshape.band = parse_band(s, "band", c.lineshape.band);
    s.finish();
}

void parse_compare(Section& root, ExperimentConfig& c)
{
    CompareConfig& cc = c.compare;
    cc.reference.gauge = GaugeChoice::dipole();
    cc.candidate.gauge = GaugeChoice::naive_coulomb();
    if (!root.has("compare")) {
        return;
    }
    Section s(root.node("compare"), "compare", root.source());
    cc.reference = parse_gauge(s, "reference", GaugeKind::Dipole);
    cc.candidate = parse_gauge(s, "candidate", GaugeKind::NaiveCoulomb);
    if (s.has("expect_exponent")) {
        cc.expect_exponent = s.get<double>("expect_exponent", 0.0);
    }
    cc.tolerance = s.positive("tolerance", 0.15);
    if (s.has("fit_band")) {
        const Band b = parse_band(s, "fit_band", {});
        cc.comparison.fit_lo = b.lo;
        cc.comparison.fit_hi = b.hi;
    }
    cc.comparison.core_halfwidth = s.nonnegative("core_halfwidth", 0.0);
    cc.comparison.recenter = s.get<bool>("recenter", true);
    s.finish();
}

CouplingSpec parse_coupling(Section& parent, const ExperimentConfig& c, std::size_t n_aux)
{
    if (!parent.has("coupling")) {
        return NoCoupling{};
    }
    Section s(parent.node("coupling"), "mastereq.coupling", parent.source());
    const std::string kind = s.require<std::string>("kind");
    CouplingSpec out = NoCoupling{};
    if (kind == "none") {
        out = NoCoupling{};
    } else if (kind == "exchange") {
        ExchangeSpec spec;
        const YAML::Node terms = s.node("terms");
        if (!terms || !terms.IsSequence()) {
            s.error("terms", "expected a list of {aux, g}");
        }
        for (const YAML::Node& t : terms) {
            Section ts(t, s.key("terms"), s.source());
            const int aux = ts.require<int>("aux");
            if (aux < 0 || static_cast<std::size_t>(aux) >= n_aux) {
                ts.error("aux", "no auxiliary mode with this index");
            }
            spec.terms.push_back({aux, ts.require<double>("g")});
            ts.finish();
        }
        out = spec;
    } else if (kind == "random") {
        RandomHermitianSpec spec;
        spec.seed = s.get<std::uint64_t>("seed", c.seed);
        spec.scale = s.positive("scale", 0.1);
        spec.structure = choose<RandomStructure>(
            s, "structure", {{"full", RandomStructure::Full}, {"aux-only", RandomStructure::AuxOnly}},
            RandomStructure::Full);
        out = spec;
    } else if (kind == "general") {
        const YAML::Node rows = s.node("matrix");
        if (!rows || !rows.IsSequence()) {
            s.error("matrix", "expected a list of rows");
        }
        const auto n = static_cast<Eigen::Index>(rows.size());
        Eigen::MatrixXcd m(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const YAML::Node row = rows[static_cast<std::size_t>(i)];
            if (!row.IsSequence() || static_cast<Eigen::Index>(row.size()) != n) {
                fail(s.source(), row, s.key("matrix"), "rows must have one entry per column");
            }
            for (Eigen::Index j = 0; j < n; ++j) {
                const YAML::Node e = row[static_cast<std::size_t>(j)];
                if (e.IsSequence() && e.size() == 2) {
                    m(i, j) = {s.as<double>(e[0], s.key("matrix")), s.as<double>(e[1], s.key("matrix"))};
                } else {
                    m(i, j) = s.as<double>(e, s.key("matrix"));
                }
            }
        }
        out = GeneralHermitianSpec{m};
    } else {
        s.error("kind", "unknown coupling '" + kind + "' (expected none, exchange, random, general)");
    }
    s.finish();
    return out;
}

void parse_mastereq(Section& root, ExperimentConfig& c)
{
    if (!root.has("mastereq")) {
        return;
    }
    Section s(root.node("mastereq"), "mastereq", root.source());
    MastereqConfig& m = c.mastereq;
    if (s.has("aux")) {
        const YAML::Node list = s.node("aux");
        if (!list.IsSequence()) {
            s.error("aux", "expected a list of auxiliary modes");
        }
        for (const YAML::Node& a : list) {
            Section as(a, "mastereq.aux", s.source());
            AuxMode mode;
            mode.omega = as.positive("omega", 1.0);
            mode.kind = choose<AuxKind>(as, "kind", {{"two-level", AuxKind::TwoLevel}, {"oscillator", AuxKind::Oscillator}},
                                        AuxKind::TwoLevel);
            mode.truncation = as.get<int>("truncation", 1);
            if (mode.truncation < 1) {
                as.error("truncation", "must be at least 1");
            }
            if (mode.kind == AuxKind::TwoLevel && mode.truncation != 1) {
                as.error("truncation", "two-level modes have truncation 1");
            }
            m.aux.push_back(mode);
            as.finish();
        }
    }
    m.coupling = parse_coupling(s, c, m.aux.size());
    m.density = parse_density(s, "spectral_density");
    m.secular = s.get<bool>("secular", true);
    if (s.has("delta_sec")) {
        m.delta_sec = s.positive("delta_sec", 1.0);
    }
    m.route = choose<CoulombRoute>(
        s, "route", {{"reduced", CoulombRoute::Reduced}, {"coupling-operator", CoulombRoute::CouplingOperator}},
        CoulombRoute::Reduced);
    m.t_final = s.nonnegative("t_final", 0.0);
    m.samples = s.get<int>("samples", 20);
    if (m.samples < 1) {
        s.error("samples", "must be at least 1");
    }
    const int cap = s.get<int>("dim_cap", static_cast<int>(kDefaultDimCap));
    if (cap < 2) {
        s.error("dim_cap", "must be at least 2");
    }
    m.dim_cap = static_cast<std::size_t>(cap);
    m.evolution.abs_tol = s.positive("abs_tol", 1e-12);
    m.evolution.rel_tol = s.positive("rel_tol", 1e-12);
    s.finish();
}

void parse_identity(Section& root, ExperimentConfig& c)
{
    if (!root.has("identity")) {
        return;
    }
    Section s(root.node("identity"), "identity", root.source());
    const int models = s.get<int>("models", 100);
    if (models < 1) {
        s.error("models", "must be at least 1");
    }
    const int dim = s.get<int>("max_dim", 64);
    if (dim < 2) {
        s.error("max_dim", "must be at least 2");
    }
    c.identity = {static_cast<std::size_t>(models), static_cast<std::size_t>(dim)};
    s.finish();
}

void parse_sweep(Section& root, ExperimentConfig& c)
{
    c.sweep.splittings = {0.01, 0.0158489, 0.0251189, 0.0398107, 0.0630957, 0.1};
    if (!root.has("sweep")) {
        return;
    }
    Section s(root.node("sweep"), "sweep", root.source());
    if (s.has("splittings") && s.has("from")) {
        s.error("from", "give either splittings or from/to/points");
    }
    if (s.has("splittings")) {
        c.sweep.splittings = s.numbers("splittings");
    } else if (s.has("from")) {
        const double lo = s.positive("from", 0.01);
        const double hi = s.positive("to", 0.1);
        const int n = s.get<int>("points", 6);
        if (n < 2) {
            s.error("points", "need at least 2 points");
        }
        c.sweep.splittings.clear();
        for (int i = 0; i < n; ++i) {
            c.sweep.splittings.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
        }
    }
    for (double d : c.sweep.splittings) {
        if (!(d > 0.0)) {
            s.error("splittings", "splittings must be positive");
        }
    }
    c.sweep.density = parse_density(s, "spectral_density");
    s.finish();
}

// Assembles a two-mode instance so option conflicts surface at validation time.
void check_gauge_conflict(Section& root, const std::string& key, const GaugeConfig& g, int max_photons,
                          const TlaParams& tla)
{
    try {
        const SpectralDensity sd = make_density(FreeSpaceCubic{}, tla);
        const ModeBath bath = discretize(sd, {0.5, 1.5}, 2, QuadratureRule::UniformGrid);
        (void)assemble_hamiltonian(FockBasis(2, max_photons), bath, tla, g.gauge, g.options);
    } catch (const ConfigurationError& e) {
        root.error(key, std::string("configuration conflict: ") + e.what());
    }
}

} // namespace

std::string to_string(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::Lineshape: return "lineshape";
    case ExperimentKind::Emission: return "emission";
    case ExperimentKind::GaugeCompare: return "gauge-compare";
    case ExperimentKind::Mastereq: return "mastereq";
    case ExperimentKind::IdentityCheck: return "identity-check";
    case ExperimentKind::GapSweep: return "gap-sweep";
    }
    return "unknown";
}

const std::vector<std::pair<std::string, std::string>>& experiment_catalog()
{
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"lineshape", "analytic S_ph and S'_ph on a grid, ratio and Markov normalization checks"},
        {"emission", "single-gauge spontaneous-emission run: spectrum, survival, lineshape check"},
        {"gauge-compare", "two emission runs and the fitted wing exponent of their spectrum ratio"},
        {"mastereq", "transition table and dipole vs Coulomb density-matrix dynamics for one model"},
        {"identity-check", "coupling identity c' = i (w/w0) c over random models"},
        {"gap-sweep", "non-secular generator gap against the exchange splitting, power-law fit"},
    };
    return catalog;
}

void apply_override(YAML::Node& document, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw SchemaError("override '" + assignment + "': expected key=value");
    }
    const std::string path = assignment.substr(0, eq);
    YAML::Node value;
    try {
        value = YAML::Load(assignment.substr(eq + 1));
    } catch (const YAML::Exception& e) {
        throw SchemaError("override '" + assignment + "': " + e.msg);
    }
    std::vector<std::string> parts;
    std::stringstream ss(path);
    for (std::string part; std::getline(ss, part, '.');) {
        if (part.empty()) {
            throw SchemaError("override '" + assignment + "': empty key segment");
        }
        parts.push_back(part);
    }
    if (!document || document.IsNull()) {
        document = YAML::Node(YAML::NodeType::Map);
    }
    std::vector<YAML::Node> chain{document};
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        YAML::Node next = chain.back()[parts[i]];
        if (!next.IsDefined() || next.IsNull()) {
            chain.back()[parts[i]] = YAML::Node(YAML::NodeType::Map);
            next = chain.back()[parts[i]];
        } else if (!next.IsMap()) {
            throw SchemaError("override '" + assignment + "': '" + parts[i] + "' is not a mapping");
        }
        chain.push_back(next);
    }
    chain.back()[parts.back()] = value;
}

SpectralDensity make_density(const SpectralKind& kind, const TlaParams& tla)
{
    return SpectralDensity(kind, tla.omega0(), tla.gamma0());
}

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides,
                             std::optional<std::uint64_t> seed)
{
    std::ifstream in(path);
    if (!in) {
        throw SchemaError(path + ": cannot read configuration file");
    }
    YAML::Node doc;
    try {
        doc = YAML::Load(in);
    } catch (const YAML::ParserException& e) {
        throw SchemaError(path + ":" + std::to_string(e.mark.line + 1) + ":" + std::to_string(e.mark.column + 1) +
                          ": " + e.msg);
    }
    for (const std::string& o : overrides) {
        apply_override(doc, o);
    }
    return parse_config(doc, path, seed);
}

ExperimentConfig parse_config(const YAML::Node& document, const std::string& source,
                              std::optional<std::uint64_t> seed)
{
    ExperimentConfig c;
    c.document = YAML::Clone(document);
    if (!document || document.IsNull()) {
        throw SchemaError(source + ": empty configuration");
    }
    Section root(document, "", source);
    const std::string name = root.require<std::string>("experiment");
    bool found = false;
    for (ExperimentKind k : {ExperimentKind::Lineshape, ExperimentKind::Emission, ExperimentKind::GaugeCompare,
                             ExperimentKind::Mastereq, ExperimentKind::IdentityCheck, ExperimentKind::GapSweep}) {
        if (to_string(k) == name) {
            c.kind = k;
            found = true;
        }
    }
    if (!found) {
        root.error("experiment", "unknown experiment '" + name + "'");
    }
    c.seed = root.get<std::uint64_t>("seed", 0);
    if (seed) {
        c.seed = *seed;
    }
    c.output = root.get<std::string>("output", "");

    // Sections outside the experiment's set stay unconsumed and fail finish().
    switch (c.kind) {
    case ExperimentKind::Lineshape:
        parse_tla(root, c);
        parse_lineshape(root, c);
        break;
    case ExperimentKind::Emission:
        parse_tla(root, c);
        parse_bath(root, c);
        c.gauge = parse_gauge(root, "gauge", GaugeKind::Dipole);
        parse_emission(root, c);
        check_gauge_conflict(root, "gauge", c.gauge, c.emission.max_photons, c.tla);
        break;
    case ExperimentKind::GaugeCompare:
        parse_tla(root, c);
        parse_bath(root, c);
        parse_emission(root, c);
        parse_compare(root, c);
        check_gauge_conflict(root, "compare", c.compare.reference, c.emission.max_photons, c.tla);
        check_gauge_conflict(root, "compare", c.compare.candidate, c.emission.max_photons, c.tla);
        break;
    case ExperimentKind::Mastereq:
        parse_tla(root, c);
        parse_mastereq(root, c);
        break;
    case ExperimentKind::IdentityCheck:
        parse_identity(root, c);
        break;
    case ExperimentKind::GapSweep:
        parse_tla(root, c);
        parse_sweep(root, c);
        break;
    }
    root.finish();
    return c;
}

YAML::Node derived_quantities(const ExperimentConfig& c)
{
    YAML::Node d;
    d["experiment"] = to_string(c.kind);
    d["omega0"] = c.tla.omega0();
    d["gamma0"] = c.tla.gamma0();
    d["dipole"] = c.tla.dipole();
    d["xi0_trk"] = derive_xi0(c.tla);
    d["seed"] = c.seed;
    switch (c.kind) {
    case ExperimentKind::Emission:
    case ExperimentKind::GaugeCompare: {
        const FockBasis basis(c.bath.modes, c.emission.max_photons);
        d["modes"] = c.bath.modes;
        d["basis_dim"] = basis.dim();
        const double width = (c.bath.band.hi - c.bath.band.lo) / static_cast<double>(c.bath.modes);
        d["recurrence_time"] = 2.0 * kPi / width;
        d["t_final"] = c.emission.t_final > 0.0 ? c.emission.t_final : 16.0 / c.tla.gamma0();
        break;
    }
    case ExperimentKind::Mastereq: {
        std::size_t dim = 2;
        for (const AuxMode& a : c.mastereq.aux) {
            dim *= static_cast<std::size_t>(a.levels());
        }
        d["system_dim"] = dim;
        d["t_final"] = c.mastereq.t_final > 0.0 ? c.mastereq.t_final : 10.0 / c.tla.gamma0();
        break;
    }
    case ExperimentKind::IdentityCheck:
        d["models"] = c.identity.models;
        d["max_dim"] = c.identity.max_dim;
        break;
    case ExperimentKind::GapSweep:
        d["points"] = c.sweep.splittings.size();
        break;
    case ExperimentKind::Lineshape:
        d["points"] = c.lineshape.points;
        break;
    }
    return d;
}

} // namespace tlagauge
