#ifndef QSCAT_PRESETS_HPP
#define QSCAT_PRESETS_HPP

// Figure presets. Each preset is a list of panels; a panel is one sweep
// written to one CSV. Natural units (hbar = m = 1) throughout.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qscat/sweep.hpp"
#include "qscat/table.hpp"

namespace qscat {

struct FigurePanel {
  std::string name;         // file stem, e.g. "fig5_a"
  std::string parameters;   // human-readable key=value list for the manifest
  SweepSpec spec;
};

inline const std::vector<std::string>& figure_preset_names() {
  static const std::vector<std::string> names = {"fig1", "fig3", "fig3a", "fig4", "fig5", "fig7", "fig10", "fig11"};
  return names;
}

namespace detail {

inline std::string panel_name(const std::string& fig, std::size_t i) {
  return fig + "_" + std::string(1, static_cast<char>('a' + i));
}

inline std::string kv(std::initializer_list<std::pair<const char*, double>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : items) {
    if (!first) os << ' ';
    first = false;
    os << k << '=' << format_number(v);
  }
  return os.str();
}

}  // namespace detail

/// Panels of a preset, or nullopt for an unknown name.
inline std::optional<std::vector<FigurePanel>> figure_preset(const std::string& name) {
  std::vector<FigurePanel> panels;
  auto add = [&](std::string params, SweepSpec spec) {
    panels.push_back({detail::panel_name(name, panels.size()), std::move(params), std::move(spec)});
  };

  if (name == "fig1") {
    // Delta potential, T and R against k for k0 = m alpha / hbar^2.
    for (double k0 : {1.0, 2.0, 10.0, 100.0, 1000.0}) {
      SweepSpec s;
      s.potential = Delta{k0};
      s.variable = SweepVariable::k;
      s.lo = k0 / 50.0;
      s.hi = 10.0 * k0;
      s.points = 500;
      add(detail::kv({{"k0", k0}, {"alpha", k0}}), s);
    }
  } else if (name == "fig3") {
    // Rectangular barrier, a = 1, against q for several k0 = sqrt(2 m v0)/hbar.
    for (double k0 : {1.0, 2.0, 10.0, 100.0, 1000.0}) {
      SweepSpec s;
      s.potential = Rectangular{0.5 * k0 * k0, 1.0};
      s.variable = SweepVariable::q;
      s.lo = 0.01;
      s.hi = 20.0;
      s.points = 2000;
      add(detail::kv({{"k0", k0}, {"v0", 0.5 * k0 * k0}, {"a", 1.0}}), s);
    }
  } else if (name == "fig3a") {
    // Rectangular barrier, k0 = 1, against q for several widths.
    for (double a : {1.0, 2.0, 10.0, 100.0}) {
      SweepSpec s;
      s.potential = Rectangular{0.5, a};
      s.variable = SweepVariable::q;
      s.lo = 0.0005;
      s.hi = 4.0;
      s.points = 8000;
      add(detail::kv({{"k0", 1.0}, {"v0", 0.5}, {"a", a}}), s);
    }
  } else if (name == "fig4") {
    // Exact T against the transfer-matrix lower bound above the barrier.
    SweepSpec s;
    s.potential = Rectangular{1.0, 1.0};
    s.variable = SweepVariable::E;
    s.lo = 1.04;
    s.hi = 21.0;
    s.points = 500;
    s.methods = {Method::exact, Method::bound};
    add(detail::kv({{"v0", 1.0}, {"a", 1.0}}), s);
  } else if (name == "fig5") {
    // Tunnelling: exact T against WKB for several barrier heights, a = 1.
    for (double v0 : {1.0, 10.0, 50.0, 100.0}) {
      SweepSpec s;
      s.potential = Rectangular{v0, 1.0};
      s.variable = SweepVariable::E;
      s.lo = v0 / 500.0;
      s.hi = v0 * 499.0 / 500.0;
      s.points = 499;
      s.methods = {Method::exact, Method::wkb};
      add(detail::kv({{"v0", v0}, {"a", 1.0}}), s);
    }
  } else if (name == "fig7") {
    // Eckart against V0 with k(-inf) = 1 and k(+inf) = 2: E = 1/2 above
    // V(-inf) = 0 and V(+inf) = -3/2.
    for (double a : {1.0, 2.0}) {
      SweepSpec s;
      s.potential = Eckart{0.0, -1.5, 0.0, a};
      s.variable = SweepVariable::V0;
      s.energy = 0.5;
      s.lo = -10.0;
      s.hi = 2.0;
      s.points = 1201;
      add(detail::kv({{"a", a}, {"k_minus_inf", 1.0}, {"k_plus_inf", 2.0}, {"E", 0.5}}), s);
    }
  } else if (name == "fig10") {
    // Hulthen exact T and R against E, m = 1, v0 = 1, q = 0.9.
    for (double a : {0.5, 1.0}) {
      SweepSpec s;
      s.potential = Hulthen{1.0, a, 0.9};
      s.variable = SweepVariable::E;
      s.lo = 1.0 + 9.0 / 500.0;
      s.hi = 10.0;
      s.points = 500;
      add(detail::kv({{"v0", 1.0}, {"a", a}, {"q", 0.9}, {"m", 1.0}}), s);
    }
  } else if (name == "fig11") {
    // Hulthen WKB over the fixed window (-1, 1), q = 0.9, a = 0.5.
    for (double v0 : {1.0, 2.0, 10.0, 50.0}) {
      SweepSpec s;
      s.potential = Hulthen{v0, 0.5, 0.9};
      s.variable = SweepVariable::E;
      s.lo = 0.01;
      s.hi = 1.0;
      s.points = 100;
      s.methods = {Method::wkb};
      add(detail::kv({{"v0", v0}, {"a", 0.5}, {"q", 0.9}}), s);
    }
  } else {
    return std::nullopt;
  }
  return panels;
}

}  // namespace qscat

#endif  // QSCAT_PRESETS_HPP
