#include "chowq/corpus.hpp"

#include <random>

namespace chowq {

namespace {

using io::json;

// Plain modular reduction keeps the stream identical across standard libraries.
struct Rng {
    std::mt19937_64 gen;
    long range(long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

IntVec quadric_weights(Rng& rng, std::size_t r, long bound) {
    for (;;) {
        IntVec z;
        for (std::size_t i = 0; i + 1 <= r; i += 2) {
            long a = rng.range(-bound, bound);
            z.push_back(Int(-a));
            z.push_back(Int(a));
        }
        if (r % 2 == 0) z.push_back(0);
        for (const auto& x : z)
            if (x != 0) return z;
    }
}

json weights_input(const IntVec& z) { return json{{"weights", io::to_json(z)}}; }

json envelope(const std::string& command, json body) {
    json out{{"schema_version", io::kSchemaVersion}, {"command", command}};
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

IntMat cubic_transfer_p() {
    IntMat p(7, 8);
    for (std::size_t i = 0; i < 7; ++i) {
        p(i, 0) = -1;
        p(i, i + 1) = 1;
    }
    return p;
}

}  // namespace

std::vector<CorpusEntry> regression_corpus(std::uint64_t seed, std::size_t random_count) {
    std::vector<CorpusEntry> out;
    auto add = [&](const std::string& stem, const std::string& command, json body) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%02zu_", out.size() + 1);
        out.push_back({buf + stem, command, envelope(command, std::move(body))});
    };

    add("seven_weights", "coxring", weights_input(make_vec({-2, 2, -1, 1, 0, 0, 0})));
    {
        LaurentPoly g(8);
        for (std::size_t i = 0; i < 8; i += 2) {
            IntVec e(8);
            e[i] = e[i + 1] = 1;
            g.add_term(e, 1);
        }
        std::vector<std::string> vars{"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"};
        add("cubic_transfer", "transfer",
            json{{"g", io::to_json(g, vars)},
                 {"p", io::to_json(cubic_transfer_p())},
                 {"b", io::to_json(IntMat::from_columns({make_vec({1, 0, 1, 0, 0, 0, 0})}, 7))},
                 {"new_vars", {"T9"}}});
    }
    add("eight_weights", "tropres", weights_input(make_vec({-3, 3, -3, 3, -2, 2, -1, 1})));

    Rng rng{std::mt19937_64(seed)};
    const char* plan[] = {"tropres", "coxring", "gale", "gkz-rays", "transfer"};
    for (std::size_t k = 0; k < random_count; ++k) {
        const std::string command = plan[k % 5];
        const std::string stem = "random_" + command;
        if (command == "tropres") {
            add(stem, command, weights_input(quadric_weights(rng, static_cast<std::size_t>(rng.range(3, 7)), 3)));
        } else if (command == "coxring") {
            for (;;) {
                IntVec z = quadric_weights(rng, static_cast<std::size_t>(rng.range(4, 8)), 2);
                if (validate_hypotheses(WeightSystem{z}).ok()) {
                    add(stem, command, weights_input(z));
                    break;
                }
            }
        } else if (command == "gale") {
            const std::size_t rows = static_cast<std::size_t>(rng.range(1, 3));
            const std::size_t cols = rows + static_cast<std::size_t>(rng.range(1, 4));
            for (;;) {
                IntMat q(rows, cols);
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t j = 0; j < cols; ++j) q(i, j) = rng.range(-4, 4);
                if (rank(q) == rows) {
                    add(stem, command, json{{"q", io::to_json(q)}});
                    break;
                }
            }
        } else if (command == "gkz-rays") {
            for (;;) {
                const std::size_t cols = static_cast<std::size_t>(rng.range(4, 7));
                IntMat q(2, cols);
                for (std::size_t j = 0; j < cols; ++j) {
                    q(0, j) = rng.range(-3, 3);
                    q(1, j) = 1;
                }
                if (rank(q) != 2 || !columns_generate_lattice(q)) continue;
                if (!check_ray_formula_hypotheses(VectorConfig::from_q(q)).ok()) continue;
                add(stem, command, json{{"q", io::to_json(q)}});
                break;
            }
        } else {
            for (;;) {
                IntVec z = quadric_weights(rng, static_cast<std::size_t>(rng.range(3, 6)), 3);
                const VectorConfig cfg = VectorConfig::from_q(WeightSystem{z}.q());
                if (!check_ray_formula_hypotheses(cfg).ok()) continue;
                std::vector<IntVec> b;
                for (const auto& ray : gkz_rays_corank2(cfg))
                    if (ray.origin == GkzRay::Origin::Hyperplane) b.push_back(ray.generator);
                if (b.empty()) continue;
                const std::size_t r = z.size() - 1;
                add(stem, command,
                    json{{"g", io::to_json(quadric_normal_form(r), default_var_names(r + 1, 0))},
                         {"p", io::to_json(cfg.p)},
                         {"b", io::to_json(IntMat::from_columns(b, cfg.p.rows()))}});
                break;
            }
        }
    }
    return out;
}

}  // namespace chowq
