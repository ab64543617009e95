#include "config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

namespace mdsl::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    double parse() {
        const double v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ConfigError("bad expression '" + s_ + "': " + why);
    }
    double sum() {
        double v = product();
        for (;;) {
            if (eat('+')) v += product();
            else if (eat('-')) v -= product();
            else return v;
        }
    }
    double product() {
        double v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) v /= unary();
            else return v;
        }
    }
    double unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return atom();
    }
    double atom() {
        skip();
        if (eat('(')) {
            const double v = sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (s_.compare(pos_, 2, "pi") == 0) {
            pos_ += 2;
            return std::numbers::pi;
        }
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("expected a number");
        pos_ += static_cast<std::size_t>(end - begin);
        return v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::vector<double> list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError(key + ": empty list entry");
        out.push_back(evaluate_expression(item));
    }
    return out;
}

std::vector<double> list_of(const std::string& key, const std::string& value, std::size_t n) {
    std::vector<double> v = list(key, value);
    if (v.size() != n) {
        throw ConfigError(key + ": expected " + std::to_string(n) + " values, got " +
                          std::to_string(v.size()));
    }
    return v;
}

Potential polynomial(std::vector<double> c) {
    return [c = std::move(c)](double x) {
        double v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
    };
}

PiecewisePotential potential(const std::map<std::string, std::string>& kv) {
    const auto it = kv.find("problem.potential");
    if (it == kv.end() || it->second == "zero") return PiecewisePotential::zero();
    const std::string& d = it->second;
    if (d.rfind("constant", 0) == 0) {
        return PiecewisePotential::constant(evaluate_expression(d.substr(8)));
    }
    if (d == "piecewise_poly") {
        PiecewisePotential p;
        for (int i = 0; i < 3; ++i) {
            const std::string key = "problem.potential.piece" + std::to_string(i + 1);
            const auto c = kv.find(key);
            if (c == kv.end()) throw ConfigError(key + " is required for piecewise_poly");
            p.pieces[static_cast<std::size_t>(i)] = polynomial(list(key, c->second));
        }
        return p;
    }
    throw ConfigError("problem.potential: unknown descriptor '" + d +
                      "' (use zero, constant <c> or piecewise_poly)");
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    int number = 0;
    while (std::getline(ss, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(number) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(number) + ": empty key");
        if (!kv.emplace(key, trim(line.substr(eq + 1))).second) {
            throw ConfigError("line " + std::to_string(number) + ": duplicate key " + key);
        }
    }
    return kv;
}

double evaluate_expression(const std::string& text) { return ExprParser(text).parse(); }

RunConfig load_config(const std::string& text) {
    const auto kv = parse_key_values(text);
    static const std::set<std::string> known = {
        "problem.a", "problem.b", "problem.epsilon", "problem.beta", "problem.alpha_primed",
        "problem.alpha", "problem.mu", "problem.eta", "problem.potential",
        "problem.potential.piece1", "problem.potential.piece2", "problem.potential.piece3",
        "solver.lambda_max", "solver.scan_step", "solver.refine_tol", "solver.grid_points",
        "solver.oracle_m", "output.format", "output.path", "output.precision"};
    for (const auto& [k, v] : kv) {
        if (!known.count(k)) throw ConfigError("unknown key " + k);
    }
    const auto get = [&](const std::string& k) -> const std::string* {
        const auto it = kv.find(k);
        return it == kv.end() ? nullptr : &it->second;
    };
    const auto require = [&](const std::string& k) -> const std::string& {
        const std::string* v = get(k);
        if (!v) throw ConfigError("missing required key " + k);
        return *v;
    };

    RunConfig c;
    ProblemSpec& p = c.problem;
    p.a = evaluate_expression(require("problem.a"));
    p.b = evaluate_expression(require("problem.b"));
    p.epsilon = evaluate_expression(require("problem.epsilon"));
    const auto beta = list_of("problem.beta", require("problem.beta"), 2);
    p.left_bc = {beta[0], beta[1]};
    const auto ap = list_of("problem.alpha_primed", require("problem.alpha_primed"), 2);
    const auto al = list_of("problem.alpha", require("problem.alpha"), 2);
    p.right_bc = {ap[0], ap[1], al[0], al[1]};
    if (const std::string* v = get("problem.mu")) {
        const auto m = list_of("problem.mu", *v, 4);
        p.t_left = {m[0], m[1], m[2], m[3]};
    }
    if (const std::string* v = get("problem.eta")) {
        const auto m = list_of("problem.eta", *v, 4);
        p.t_right = {m[0], m[1], m[2], m[3]};
    }
    p.potential = potential(kv);

    if (const std::string* v = get("solver.lambda_max")) c.solver.lambda_max = evaluate_expression(*v);
    if (const std::string* v = get("solver.scan_step")) c.solver.scan_step = evaluate_expression(*v);
    if (const std::string* v = get("solver.refine_tol")) c.solver.refine_tol = evaluate_expression(*v);
    if (const std::string* v = get("solver.grid_points")) {
        const double n = evaluate_expression(*v);
        if (!(n >= 5) || n != std::floor(n)) throw ConfigError("solver.grid_points must be an integer >= 5");
        c.solver.grid_points = static_cast<std::size_t>(n);
    }
    if (const std::string* v = get("solver.oracle_m")) {
        const double m = evaluate_expression(*v);
        if (m != std::floor(m) || m < 1) throw ConfigError("solver.oracle_m must be a positive integer");
        c.solver.oracle_m = static_cast<int>(m);
    }
    if (const std::string* v = get("output.format")) {
        if (*v == "csv") c.output.format = Format::csv;
        else if (*v == "jsonl") c.output.format = Format::jsonl;
        else throw ConfigError("output.format must be csv or jsonl");
    }
    if (const std::string* v = get("output.path")) c.output.path = *v;
    if (const std::string* v = get("output.precision")) {
        const double d = evaluate_expression(*v);
        if (d != std::floor(d) || d < 1 || d > 17) throw ConfigError("output.precision must be 1..17");
        c.output.precision = static_cast<int>(d);
    }
    return c;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_config(ss.str());
}

}  // namespace mdsl::cli
