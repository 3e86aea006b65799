#include "weyllab/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "weyllab/errors.hpp"

namespace weyllab {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    return std::string{s.substr(b, e - b + 1)};
}

std::string fmt17(double v) {
    if (v == 0.0) v = 0.0;  // canonicalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct RawValue {
    std::string value;
    int line = 0;
    mutable bool used = false;
};

/// Two-phase parse: collect section/key/value with line numbers, then
/// interpret. Every key must be consumed or the config is rejected.
class KeyTable {
public:
    KeyTable(std::string_view text, std::string name) : name_(std::move(name)) {
        std::istringstream in{std::string{text}};
        std::string raw;
        std::string section;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            const size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            const std::string line = trim(raw);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') fail(lineno, "malformed section header");
                section = trim(line.substr(1, line.size() - 2));
                if (section.empty()) fail(lineno, "empty section name");
                if (!known_section(section)) fail(lineno, "unknown section [" + section + "]");
                continue;
            }
            const size_t eq = line.find('=');
            if (eq == std::string::npos) fail(lineno, "expected key = value");
            if (section.empty()) fail(lineno, "key outside any [section]");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) fail(lineno, "empty key");
            if (value.empty()) fail(lineno, "empty value for key " + key);
            const std::string full = section + "." + key;
            if (table_.count(full) != 0) fail(lineno, "duplicate key " + key);
            table_[full] = RawValue{value, lineno};
        }
    }

    [[noreturn]] void fail(int line, const std::string& what) const {
        throw ConfigError(name_ + ":" + std::to_string(line) + ": " + what);
    }

    [[noreturn]] void fail_key(const std::string& full, const std::string& what) const {
        const auto it = table_.find(full);
        const int line = it == table_.end() ? 0 : it->second.line;
        throw ConfigError(name_ + ":" + std::to_string(line) + ": " +
                          full.substr(full.find('.') + 1) + ": " + what);
    }

    std::optional<std::string> get(const std::string& section, const std::string& key) const {
        const auto it = table_.find(section + "." + key);
        if (it == table_.end()) return std::nullopt;
        it->second.used = true;
        return it->second.value;
    }

    double get_double(const std::string& section, const std::string& key, double fallback) const {
        const auto raw = get(section, key);
        if (!raw) return fallback;
        try {
            size_t pos = 0;
            const double v = std::stod(*raw, &pos);
            if (pos != raw->size()) throw std::invalid_argument("");
            if (!std::isfinite(v)) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            fail_key(section + "." + key, "finite real number required, got '" + *raw + "'");
        }
    }

    int get_int(const std::string& section, const std::string& key, int fallback) const {
        const auto raw = get(section, key);
        if (!raw) return fallback;
        try {
            size_t pos = 0;
            const long v = std::stol(*raw, &pos);
            if (pos != raw->size()) throw std::invalid_argument("");
            return static_cast<int>(v);
        } catch (const std::exception&) {
            fail_key(section + "." + key, "integer required, got '" + *raw + "'");
        }
    }

    std::uint64_t get_u64(const std::string& section, const std::string& key,
                          std::uint64_t fallback) const {
        const auto raw = get(section, key);
        if (!raw) return fallback;
        try {
            size_t pos = 0;
            const unsigned long long v = std::stoull(*raw, &pos);
            if (pos != raw->size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            fail_key(section + "." + key, "unsigned integer required, got '" + *raw + "'");
        }
    }

    std::string get_word(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
        const auto raw = get(section, key);
        return raw ? *raw : fallback;
    }

    void reject_unused() const {
        for (const auto& [full, rv] : table_) {
            if (!rv.used) {
                throw ConfigError(name_ + ":" + std::to_string(rv.line) + ": unknown key " +
                                  full.substr(full.find('.') + 1) + " in section [" +
                                  full.substr(0, full.find('.')) + "]");
            }
        }
    }

private:
    static bool known_section(const std::string& s) {
        return s == "solution" || s == "potential" || s == "verify" || s == "output";
    }

    std::string name_;
    std::map<std::string, RawValue> table_;
};

std::vector<std::vector<double>> parse_tuple_list(const KeyTable& kt, const std::string& section,
                                                  const std::string& key, const std::string& raw,
                                                  size_t arity) {
    std::vector<std::vector<double>> out;
    std::istringstream groups{raw};
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::istringstream nums{group};
        std::vector<double> tuple;
        double v = 0.0;
        while (nums >> v) tuple.push_back(v);
        if (tuple.size() != arity) {
            kt.fail_key(section + "." + key,
                        "each ';'-separated group needs " + std::to_string(arity) + " numbers");
        }
        out.push_back(std::move(tuple));
    }
    if (out.empty()) kt.fail_key(section + "." + key, "at least one group required");
    return out;
}

Profile1D parse_envelope(const KeyTable& kt, const std::string& name, bool default_unit) {
    const std::string kind = kt.get_word("solution", name, "constant");
    const auto dbl = [&](const std::string& k, double fb) {
        return kt.get_double("solution", name + "." + k, fb);
    };
    try {
        if (kind == "constant") {
            return Profile1D::constant(dbl("value", default_unit ? 1.0 : 0.0));
        }
        if (kind == "gaussian") {
            return Profile1D::gaussian(dbl("A", 1.0), dbl("k", 1.0), dbl("w0", 0.0));
        }
        if (kind == "offset_gaussian") {
            return Profile1D::offset_gaussian(dbl("B", 0.0), dbl("A", 1.0), dbl("k", 1.0),
                                              dbl("w0", 0.0));
        }
        if (kind == "sum_of_gaussians") {
            const auto raw = kt.get("solution", name + ".terms");
            if (!raw) kt.fail_key("solution." + name, "sum_of_gaussians needs " + name + ".terms");
            std::vector<GaussianTerm> terms;
            for (const auto& t : parse_tuple_list(kt, "solution", name + ".terms", *raw, 3)) {
                terms.push_back({t[0], t[1], t[2]});
            }
            return Profile1D::sum_of_gaussians(std::move(terms));
        }
    } catch (const std::invalid_argument& err) {
        kt.fail_key("solution." + name + ".k", err.what());
    }
    kt.fail_key("solution." + name,
                "unknown envelope kind '" + kind +
                    "' (constant | gaussian | offset_gaussian | sum_of_gaussians)");
}

Profile1D parse_phase(const KeyTable& kt) {
    const std::string kind = kt.get_word("solution", "h", "linear_phase");
    try {
        if (kind == "linear_phase") {
            return Profile1D::linear_phase(kt.get_double("solution", "h.E", 1.0));
        }
        if (kind == "erf_chirp") {
            return Profile1D::erf_chirp(kt.get_double("solution", "h.E0", 10.0),
                                        kt.get_double("solution", "h.lambda", 0.5),
                                        kt.get_double("solution", "h.w0", 0.0));
        }
    } catch (const std::invalid_argument& err) {
        kt.fail_key("solution.h", err.what());
    }
    kt.fail_key("solution.h", "unknown phase kind '" + kind + "' (linear_phase | erf_chirp)");
}

Profile2D parse_transverse(const KeyTable& kt, double* r1_out) {
    const std::string kind = kt.get_word("solution", "p", "super_gaussian");
    SuperGaussian sg;
    sg.amplitude = kt.get_double("solution", "p.A", 1.0);
    sg.kx = kt.get_double("solution", "p.k1", 1.0);
    sg.ky = kt.get_double("solution", "p.k2", 1.0);
    sg.nx = kt.get_int("solution", "p.n1", 1);
    sg.ny = kt.get_int("solution", "p.n2", 1);
    sg.x0 = kt.get_double("solution", "p.x0", 0.0);
    sg.y0 = kt.get_double("solution", "p.y0", 0.0);
    *r1_out = kt.get_double("solution", "p.r1", 1.0);
    if (!(sg.kx > 0.0)) {
        kt.fail_key("solution.p.k1", "k1 must be positive (square-integrable profile)");
    }
    if (!(sg.ky > 0.0)) {
        kt.fail_key("solution.p.k2", "k2 must be positive (square-integrable profile)");
    }
    if (sg.nx < 1) kt.fail_key("solution.p.n1", "n1 must be a positive integer exponent");
    if (sg.ny < 1) kt.fail_key("solution.p.n2", "n2 must be a positive integer exponent");
    if (!(*r1_out > 0.0)) kt.fail_key("solution.p.r1", "r1 must be positive");
    try {
        const Profile2D base = Profile2D::super_gaussian(sg);
        if (kind == "super_gaussian") return base;
        if (kind == "reciprocal") return Profile2D::reciprocal(base, *r1_out);
    } catch (const std::invalid_argument& err) {
        kt.fail_key("solution.p", err.what());
    }
    kt.fail_key("solution.p",
                "unknown transverse kind '" + kind + "' (super_gaussian | reciprocal)");
}

GaugeFunction parse_gauge(const KeyTable& kt) {
    const std::string kind = kt.get_word("potential", "gauge", "zero");
    try {
        if (kind == "zero") return GaugeFunction::zero();
        if (kind == "constant") {
            return GaugeFunction::constant(kt.get_double("potential", "gauge.s0", 1.0));
        }
        if (kind == "polynomial") {
            const auto raw = kt.get("potential", "gauge.terms");
            if (!raw) kt.fail_key("potential.gauge", "polynomial needs gauge.terms");
            std::vector<GaugeFunction::Monomial> terms;
            for (const auto& t : parse_tuple_list(kt, "potential", "gauge.terms", *raw, 5)) {
                for (size_t i = 1; i < 5; ++i) {
                    if (t[i] != std::floor(t[i]) || t[i] < 0) {
                        kt.fail_key("potential.gauge.terms", "integer exponents required");
                    }
                }
                terms.push_back({t[0], int(t[1]), int(t[2]), int(t[3]), int(t[4])});
            }
            return GaugeFunction::polynomial(std::move(terms));
        }
        if (kind == "sinusoid") {
            return GaugeFunction::sinusoid(
                kt.get_double("potential", "gauge.s0", 1.0),
                {kt.get_double("potential", "gauge.kx", 0.0),
                 kt.get_double("potential", "gauge.ky", 0.0),
                 kt.get_double("potential", "gauge.kz", 0.0)},
                kt.get_double("potential", "gauge.omega", 0.0),
                kt.get_double("potential", "gauge.phi0", 0.0));
        }
    } catch (const std::invalid_argument& err) {
        kt.fail_key("potential.gauge", err.what());
    }
    kt.fail_key("potential.gauge",
                "unknown gauge kind '" + kind + "' (zero | constant | polynomial | sinusoid)");
}

RunConfig interpret(const KeyTable& kt) {
    RunConfig cfg;

    const std::string family = kt.get_word("solution", "family", "dirac");
    if (family == "dirac") {
        cfg.family = SolutionFamily::Dirac;
    } else if (family == "weyl_directional") {
        cfg.family = SolutionFamily::WeylDirectional;
    } else if (family == "weyl_transverse") {
        cfg.family = SolutionFamily::WeylTransverse;
    } else {
        kt.fail_key("solution.family", "unknown family '" + family +
                                           "' (dirac | weyl_directional | weyl_transverse)");
    }

    const std::string species = kt.get_word("solution", "species", "particle");
    if (species == "particle") {
        cfg.species = Species::Particle;
    } else if (species == "antiparticle") {
        cfg.species = Species::Antiparticle;
    } else {
        kt.fail_key("solution.species", "expected particle or antiparticle");
    }

    const std::string hel = kt.get_word("solution", "helicity", "plus");
    if (hel == "plus") {
        cfg.helicity = Helicity::Positive;
    } else if (hel == "minus") {
        cfg.helicity = Helicity::Negative;
    } else {
        kt.fail_key("solution.helicity", "expected plus or minus");
    }

    const std::string sense = kt.get_word("solution", "sense", "+z");
    if (sense == "+z") {
        cfg.sense = AxisSense::PlusZ;
    } else if (sense == "-z") {
        cfg.sense = AxisSense::MinusZ;
    } else {
        kt.fail_key("solution.sense", "expected +z or -z");
    }

    cfg.theta = kt.get_double("solution", "theta", 0.0);
    cfg.phi = kt.get_double("solution", "phi", 0.0);
    try {
        (void)Direction(cfg.theta, cfg.phi);
    } catch (const std::invalid_argument& err) {
        kt.fail_key("solution.theta", err.what());
    }

    cfg.f = parse_envelope(kt, "f", true);
    cfg.g = parse_envelope(kt, "g", false);
    cfg.h = parse_phase(kt);
    cfg.p = parse_transverse(kt, &cfg.r1);

    cfg.charge = kt.get_double("potential", "q", 1.0);
    if (cfg.charge == 0.0) kt.fail_key("potential.q", "charge must be nonzero");
    cfg.gauge = parse_gauge(kt);

    cfg.fd.order = kt.get_int("verify", "order", 4);
    cfg.fd.step = kt.get_double("verify", "step", 0.01);
    try {
        cfg.fd.validate();
    } catch (const std::invalid_argument& err) {
        kt.fail_key("verify.order", err.what());
    }
    cfg.mass = kt.get_double("verify", "mass", 0.0);
    if (cfg.mass < 0.0) kt.fail_key("verify.mass", "mass must be nonnegative");
    cfg.grid.points_per_axis = kt.get_int("verify", "grid.points", 6);
    cfg.grid.half_width = kt.get_double("verify", "grid.half_width", 1.0);
    if (cfg.grid.points_per_axis < 2 || cfg.grid.points_per_axis > 16) {
        kt.fail_key("verify.grid.points", "points per axis must be in 2..16");
    }
    if (!(cfg.grid.half_width > 0.0)) {
        kt.fail_key("verify.grid.half_width", "half width must be positive");
    }
    cfg.gauge_samples = kt.get_int("verify", "gauge_samples", 20);
    if (cfg.gauge_samples < 1) kt.fail_key("verify.gauge_samples", "at least one sample required");
    cfg.seed = kt.get_u64("verify", "seed", 20240601);
    cfg.residual_threshold = kt.get_double("verify", "threshold.residual", 1e-6);
    cfg.field_threshold = kt.get_double("verify", "threshold.field", 1e-7);
    if (!(cfg.residual_threshold > 0.0) || !(cfg.field_threshold > 0.0)) {
        kt.fail_key("verify.threshold.residual", "thresholds must be positive");
    }

    cfg.out_dir = kt.get_word("output", "dir", "out");
    cfg.waveform_min = kt.get_double("output", "waveform.min", -5.0);
    cfg.waveform_max = kt.get_double("output", "waveform.max", 5.0);
    cfg.waveform_rows = kt.get_int("output", "waveform.rows", 1001);
    if (!(cfg.waveform_min < cfg.waveform_max)) {
        kt.fail_key("output.waveform.min", "waveform.min must be below waveform.max");
    }
    if (cfg.waveform_rows < 2) kt.fail_key("output.waveform.rows", "at least 2 rows required");
    cfg.map_points = kt.get_int("output", "map.points", 41);
    cfg.map_half_width = kt.get_double("output", "map.half_width", 2.0);
    if (cfg.map_points < 2) kt.fail_key("output.map.points", "at least 2 points per axis required");
    if (!(cfg.map_half_width > 0.0)) kt.fail_key("output.map.half_width", "must be positive");
    cfg.slice_t = kt.get_double("output", "slice.t", 0.0);
    cfg.slice_z = kt.get_double("output", "slice.z", 0.0);

    kt.reject_unused();
    return cfg;
}

void emit_envelope(std::ostringstream& out, const char* name, const Profile1D& p) {
    switch (p.kind()) {
    case Kind1D::Constant:
        out << name << " = constant\n" << name << ".value = " << fmt17(p.offset()) << "\n";
        break;
    case Kind1D::Gaussian:
        out << name << " = gaussian\n"
            << name << ".A = " << fmt17(p.terms()[0].amplitude) << "\n"
            << name << ".k = " << fmt17(p.terms()[0].decay) << "\n"
            << name << ".w0 = " << fmt17(p.terms()[0].center) << "\n";
        break;
    case Kind1D::OffsetGaussian:
        out << name << " = offset_gaussian\n"
            << name << ".B = " << fmt17(p.offset()) << "\n"
            << name << ".A = " << fmt17(p.terms()[0].amplitude) << "\n"
            << name << ".k = " << fmt17(p.terms()[0].decay) << "\n"
            << name << ".w0 = " << fmt17(p.terms()[0].center) << "\n";
        break;
    case Kind1D::SumOfGaussians: {
        out << name << " = sum_of_gaussians\n" << name << ".terms = ";
        bool first = true;
        for (const auto& t : p.terms()) {
            if (!first) out << " ; ";
            first = false;
            out << fmt17(t.amplitude) << " " << fmt17(t.decay) << " " << fmt17(t.center);
        }
        out << "\n";
        break;
    }
    case Kind1D::ErfChirp:
    case Kind1D::LinearPhase:
        break;  // phase kinds are emitted as h
    }
}

} // namespace

Direction RunConfig::direction() const {
    if (family == SolutionFamily::WeylTransverse) return axis_direction(sense);
    return {theta, phi};
}

DiracSolution RunConfig::dirac_solution() const {
    if (family != SolutionFamily::Dirac) throw ConfigError("config does not describe a Dirac run");
    return {species, direction(), f, g, h};
}

WeylDirectionalSolution RunConfig::weyl_directional_solution() const {
    if (family != SolutionFamily::WeylDirectional) {
        throw ConfigError("config does not describe a directional Weyl run");
    }
    return {helicity, direction(), f, h};
}

WeylTransverseSolution RunConfig::weyl_transverse_solution() const {
    if (family != SolutionFamily::WeylTransverse) {
        throw ConfigError("config does not describe a transverse Weyl run");
    }
    return {helicity, sense, p, f, h};
}

PotentialFamily RunConfig::potential_family() const {
    if (family == SolutionFamily::WeylTransverse) {
        return PotentialFamily::transverse(helicity, sense, p);
    }
    return PotentialFamily::directional(direction());
}

GridSpec RunConfig::verification_grid() const {
    GridSpec out = grid;
    // envelope center along the comoving coordinate; 0 for constant kinds
    const double w0 = f.terms().empty() ? 0.0 : f.terms().front().center;
    if (family == SolutionFamily::WeylTransverse) {
        const SuperGaussian& sg = p.kind() == Kind2D::Reciprocal
                                      ? p.base().super_gaussian_params()
                                      : p.super_gaussian_params();
        out.center = {0.0, sg.x0, sg.y0, w0};  // zeta = z at t = 0 for both senses
        return out;
    }
    const auto n = direction().unit();
    out.center = {0.0, w0 * n[0], w0 * n[1], w0 * n[2]};
    return out;
}

SolutionUnderTest RunConfig::solution_under_test() const {
    switch (family) {
    case SolutionFamily::Dirac:
        return SolutionUnderTest::dirac(dirac_solution(), mass);
    case SolutionFamily::WeylDirectional:
        return SolutionUnderTest::weyl(weyl_directional_solution());
    case SolutionFamily::WeylTransverse:
        return SolutionUnderTest::weyl(weyl_transverse_solution());
    }
    throw ConfigError("unreachable family");
}

bool RunConfig::operator==(const RunConfig& other) const {
    return serialize(*this) == serialize(other);
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in{path};
    if (!in) throw ConfigError(path + ": cannot open configuration file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

RunConfig parse_config_text(std::string_view text, const std::string& name) {
    const KeyTable kt{text, name};
    return interpret(kt);
}

const char* family_name(SolutionFamily f) {
    switch (f) {
    case SolutionFamily::Dirac: return "dirac";
    case SolutionFamily::WeylDirectional: return "weyl_directional";
    case SolutionFamily::WeylTransverse: return "weyl_transverse";
    }
    return "?";
}

std::string serialize(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[solution]\n";
    out << "family = " << family_name(cfg.family) << "\n";
    if (cfg.family == SolutionFamily::Dirac) {
        out << "species = " << (cfg.species == Species::Particle ? "particle" : "antiparticle")
            << "\n";
    }
    if (cfg.family != SolutionFamily::Dirac) {
        out << "helicity = " << (cfg.helicity == Helicity::Positive ? "plus" : "minus") << "\n";
    }
    if (cfg.family == SolutionFamily::WeylTransverse) {
        out << "sense = " << (cfg.sense == AxisSense::PlusZ ? "+z" : "-z") << "\n";
    } else {
        out << "theta = " << fmt17(cfg.theta) << "\n";
        out << "phi = " << fmt17(cfg.phi) << "\n";
    }
    emit_envelope(out, "f", cfg.f);
    if (cfg.family == SolutionFamily::Dirac) emit_envelope(out, "g", cfg.g);
    if (cfg.h.kind() == Kind1D::LinearPhase) {
        out << "h = linear_phase\nh.E = " << fmt17(cfg.h.energy()) << "\n";
    } else {
        out << "h = erf_chirp\n"
            << "h.E0 = " << fmt17(cfg.h.peak_energy()) << "\n"
            << "h.lambda = " << fmt17(cfg.h.lambda()) << "\n"
            << "h.w0 = " << fmt17(cfg.h.center()) << "\n";
    }
    if (cfg.family == SolutionFamily::WeylTransverse) {
        const bool rec = cfg.p.kind() == Kind2D::Reciprocal;
        const SuperGaussian& sg =
            rec ? cfg.p.base().super_gaussian_params() : cfg.p.super_gaussian_params();
        out << "p = " << (rec ? "reciprocal" : "super_gaussian") << "\n";
        out << "p.A = " << fmt17(sg.amplitude) << "\n";
        out << "p.k1 = " << fmt17(sg.kx) << "\n";
        out << "p.k2 = " << fmt17(sg.ky) << "\n";
        out << "p.n1 = " << sg.nx << "\n";
        out << "p.n2 = " << sg.ny << "\n";
        out << "p.x0 = " << fmt17(sg.x0) << "\n";
        out << "p.y0 = " << fmt17(sg.y0) << "\n";
        out << "p.r1 = " << fmt17(cfg.r1) << "\n";
    }

    out << "\n[potential]\n";
    out << "q = " << fmt17(cfg.charge) << "\n";
    switch (cfg.gauge.kind()) {
    case GaugeKind::Zero:
        out << "gauge = zero\n";
        break;
    case GaugeKind::Constant:
        out << "gauge = constant\ngauge.s0 = " << fmt17(cfg.gauge.s0()) << "\n";
        break;
    case GaugeKind::Polynomial: {
        out << "gauge = polynomial\ngauge.terms = ";
        bool first = true;
        for (const auto& m : cfg.gauge.terms()) {
            if (!first) out << " ; ";
            first = false;
            out << fmt17(m.coeff) << " " << m.pt << " " << m.px << " " << m.py << " " << m.pz;
        }
        out << "\n";
        break;
    }
    case GaugeKind::Sinusoid:
        out << "gauge = sinusoid\n";
        out << "gauge.s0 = " << fmt17(cfg.gauge.s0()) << "\n";
        out << "gauge.kx = " << fmt17(cfg.gauge.wavevector()[0]) << "\n";
        out << "gauge.ky = " << fmt17(cfg.gauge.wavevector()[1]) << "\n";
        out << "gauge.kz = " << fmt17(cfg.gauge.wavevector()[2]) << "\n";
        out << "gauge.omega = " << fmt17(cfg.gauge.omega()) << "\n";
        out << "gauge.phi0 = " << fmt17(cfg.gauge.phase()) << "\n";
        break;
    }

    out << "\n[verify]\n";
    out << "order = " << cfg.fd.order << "\n";
    out << "step = " << fmt17(cfg.fd.step) << "\n";
    out << "mass = " << fmt17(cfg.mass) << "\n";
    out << "grid.points = " << cfg.grid.points_per_axis << "\n";
    out << "grid.half_width = " << fmt17(cfg.grid.half_width) << "\n";
    out << "gauge_samples = " << cfg.gauge_samples << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "threshold.residual = " << fmt17(cfg.residual_threshold) << "\n";
    out << "threshold.field = " << fmt17(cfg.field_threshold) << "\n";

    out << "\n[output]\n";
    out << "dir = " << cfg.out_dir << "\n";
    out << "waveform.min = " << fmt17(cfg.waveform_min) << "\n";
    out << "waveform.max = " << fmt17(cfg.waveform_max) << "\n";
    out << "waveform.rows = " << cfg.waveform_rows << "\n";
    out << "map.points = " << cfg.map_points << "\n";
    out << "map.half_width = " << fmt17(cfg.map_half_width) << "\n";
    out << "slice.t = " << fmt17(cfg.slice_t) << "\n";
    out << "slice.z = " << fmt17(cfg.slice_z) << "\n";
    return out.str();
}

} // namespace weyllab
