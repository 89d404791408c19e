#pragma once

// The elements g_n = s^n a s^-n t^n a t^-2n a t^n and certificates that
// every element within distance k of g_n stays inside the ball of radius
// |g_n| = 6n, i.e. that g_n has dead-end depth at least k+1.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "lampgrid/element.hpp"
#include "lampgrid/hexagon.hpp"
#include "lampgrid/search.hpp"
#include "lampgrid/witness.hpp"
#include "lampgrid/words.hpp"

namespace lampgrid {

/// g_n and its length-6n spelling s^{n-1} (sa) s^-n t^{n-1} (ta) t^-2n (at) t^{n-1}.
inline std::pair<Element, Word> make_gn(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("g_n needs n >= 1");
    Word w{{}, Alphabet::metric};
    auto run = [&](Base b, std::int64_t k) {
        for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) w.letters.push_back({b, k < 0 ? -1 : 1});
    };
    run(Base::s, n - 1);
    run(Base::sa, 1);
    run(Base::s, -n);
    run(Base::t, n - 1);
    run(Base::ta, 1);
    run(Base::t, -2 * n);
    run(Base::at, 1);
    run(Base::t, n - 1);
    Element g{LampConfig{{-n, 0}, {0, n}, {0, -n}}, {0, 0}};
    return {std::move(g), std::move(w)};
}

struct DepthCertificate {
    std::int64_t n = 0;
    int k = 0;
    std::int64_t ball_radius = 0;  // 6n
    std::size_t neighborhood_size = 0;
    std::size_t max_witness_length = 0;
    bool certified = false;
    /// For a failed run, a word for the offending b (the neighbour is b g_n).
    std::optional<Word> failure_witness;
    std::string failure_reason;
};

inline nlohmann::json to_json_value(const DepthCertificate& c) {
    return {{"n", c.n},
            {"k", c.k},
            {"ball_radius", c.ball_radius},
            {"neighborhood_size", c.neighborhood_size},
            {"max_witness_length", c.max_witness_length},
            {"verdict", c.certified ? "certified" : "failed"},
            {"failure_witness",
             c.failure_witness ? nlohmann::json(format(*c.failure_witness)) : nlohmann::json(nullptr)}};
}

struct CertifyOptions {
    SearchLimits limits;
    /// Also confirm each neighbour's length by bidirectional search (small n only).
    bool cross_check_exact = false;
};

/// Checks every neighbour b g_n, b in B(1, k): it must satisfy
/// hex_param <= n and have a witness word of length <= 6n that replays to it.
inline DepthCertificate certify_depth(std::int64_t n, int k, const CertifyOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("certify_depth needs n >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("certify_depth needs 0 <= k <= n");

    const auto [gn, gn_word] = make_gn(n);
    DepthCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.ball_radius = 6 * n;

    Ball ball(k, opts.limits);
    cert.neighborhood_size = ball.size();
    auto fail = [&](const Element& b, std::string why) {
        cert.certified = false;
        cert.failure_witness = ball.word_for(b);
        cert.failure_reason = std::move(why);
        return cert;
    };

    for (const auto& layer : ball.layers())
        for (const Element* b : layer) {
            const Element h = multiply(*b, gn);
            if (hex_param(h) > n) return fail(*b, "neighbour leaves H_n");
            const Word w = witness_word(h);
            const auto len = a_length(w);
            cert.max_witness_length = std::max(cert.max_witness_length, len);
            if (static_cast<std::int64_t>(len) > 6 * n) return fail(*b, "witness longer than 6n");
            if (opts.cross_check_exact) {
                auto d = exact_distance(h, static_cast<int>(6 * n), opts.limits);
                if (!d.distance || *d.distance > 6 * n || static_cast<std::size_t>(*d.distance) > len)
                    return fail(*b, "exact distance disagrees with witness");
            }
        }
    cert.certified = true;
    return cert;
}

}  // namespace lampgrid
