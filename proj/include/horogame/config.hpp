#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "horogame/spaces.hpp"

namespace horogame {

// Declarative space configuration: one `key=value` per line, `#` comments.
// Keys: kind (real-window | cantor | hyperbolic-boundary | tree-boundary),
//       lo, hi            (window kinds; rationals)
//       contraction, depth (cantor)
//       branching, depth   (tree-boundary)
//       delta, visual_C, visual_a  (overrides; visual_a accepts "e")
struct SpaceConfig {
    std::map<std::string, std::string> kv;

    static SpaceConfig parse(std::istream& in) {
        SpaceConfig cfg;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("space config line " + std::to_string(lineno) + ": expected key=value");
            auto trim = [](std::string s) {
                auto a = s.find_first_not_of(" \t\r");
                auto b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            cfg.kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
        }
        return cfg;
    }

    std::string get(const std::string& key, const std::string& fallback = "") const {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : it->second;
    }
    bool has(const std::string& key) const { return kv.count(key) > 0; }
};

struct DynamicSpace {
    std::variant<LineSpace, TreeBoundary> space;
    std::string kind;
};

inline DynamicSpace build_space(const SpaceConfig& cfg) {
    std::string kind = cfg.get("kind");
    DynamicSpace out;
    out.kind = kind;
    if (kind == "real-window" || kind == "hyperbolic-boundary") {
        Rat lo = parse_rat_or_throw(cfg.get("lo", "0"), "lo");
        Rat hi = parse_rat_or_throw(cfg.get("hi", "1"), "hi");
        if (!(lo < hi)) throw std::invalid_argument("space config: need lo < hi");
        LineSpace sp = kind == "real-window" ? real_window_space(lo, hi) : boundary_window_space(lo, hi);
        if (cfg.has("delta")) sp.delta = std::stod(cfg.get("delta"));
        if (cfg.has("visual_C")) sp.visual_C = std::stod(cfg.get("visual_C"));
        if (cfg.has("visual_a") && cfg.get("visual_a") != "e") sp.visual_a = std::stod(cfg.get("visual_a"));
        if (sp.visual_C <= 1 || sp.visual_a <= 1)
            throw std::invalid_argument("space config: visual constants must exceed 1");
        out.space = sp;
    } else if (kind == "cantor") {
        Rat nu = parse_rat_or_throw(cfg.get("contraction", "1/3"), "contraction");
        int depth = std::stoi(cfg.get("depth", "10"));
        out.space = cantor_space(nu, depth);
    } else if (kind == "tree-boundary") {
        int b = std::stoi(cfg.get("branching", "2"));
        int depth = std::stoi(cfg.get("depth", "8"));
        TreeBase base;
        std::string a = cfg.get("visual_a", "e");
        if (a != "e") {
            base.is_e = false;
            base.value = parse_rat_or_throw(a, "visual_a");
        }
        out.space = TreeBoundary(b, depth, base);
    } else {
        throw std::invalid_argument("space config: unknown kind '" + kind + "'");
    }
    return out;
}

// Runtime point for config-driven calls; distance across mismatched space /
// point kinds is a type error.
using DynamicPoint = std::variant<Rat, std::string>;

inline double dynamic_distance(const DynamicSpace& sp, const DynamicPoint& p, const DynamicPoint& q) {
    if (std::holds_alternative<LineSpace>(sp.space)) {
        if (!std::holds_alternative<Rat>(p) || !std::holds_alternative<Rat>(q))
            throw std::invalid_argument("distance: tree word given to a line space");
        const auto& line = std::get<LineSpace>(sp.space);
        if (!line.in_window(std::get<Rat>(p)) || !line.in_window(std::get<Rat>(q)))
            throw std::invalid_argument("distance: point outside the declared window");
        return to_double(line.distance(std::get<Rat>(p), std::get<Rat>(q)));
    }
    const auto& tree = std::get<TreeBoundary>(sp.space);
    if (!std::holds_alternative<std::string>(p) || !std::holds_alternative<std::string>(q))
        throw std::invalid_argument("distance: coordinate point given to a tree space");
    if (!tree.valid_word(std::get<std::string>(p)) || !tree.valid_word(std::get<std::string>(q)))
        throw std::invalid_argument("distance: invalid tree word");
    return tree.scalar_value(tree.distance(std::get<std::string>(p), std::get<std::string>(q)));
}

}  // namespace horogame
