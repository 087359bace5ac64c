#pragma once

#include <cstdint>
#include <string>

#include "tlq/rational.hpp"

namespace tlq {

enum class Phase { Red, Green };

// Light schedule: deterministic ell-blocks (RED^ell GREEN^ell repeating),
// a custom finite pattern over {R, G} repeated, or coin-flip random lights.
// A pattern equal to R^ell G^ell canonicalizes to Blocks(ell).
class Schedule {
  public:
    enum class Kind { Blocks, Pattern, RandomLights };

    static Schedule blocks(int ell);
    static Schedule pattern(const std::string& word);
    static Schedule random_lights();

    Kind kind() const { return kind_; }
    int ell() const { return ell_; }
    const std::string& word() const { return word_; }

    bool deterministic() const { return kind_ != Kind::RandomLights; }
    // A pattern without at least one R and one G carries no queue dynamics
    // worth claims; flagged, not rejected.
    bool degenerate() const;

    // 1-based step index -> phase. Blocks: Red iff (i-1) mod 2*ell < ell.
    // Throws ContractError for random lights.
    Phase phase_at(std::uint64_t i) const;

    // Number of red steps among 1..n (deterministic schedules only).
    std::uint64_t red_count(std::uint64_t n) const;

    // Canonical spelling: "block:<ell>", "pattern:<word>", "random".
    std::string render() const;

    bool operator==(const Schedule& o) const;

  private:
    Schedule() = default;
    Kind kind_ = Kind::Blocks;
    int ell_ = 1;
    std::string word_;  // pattern only
};

// Grammar: "block:<int>", "pattern:<word over RG>", "random".
// Throws ParseError naming the offending position.
Schedule parse_schedule(const std::string& spec);

struct ModelParams {
    Rat p;
    Rat q;  // 1 - p, kept exact
    int ell = 1;

    ModelParams(const Rat& p_, int ell_) : p(p_), q(rat_complement(p_)), ell(ell_) {}
};

enum class Purpose { Simulation, Asymptotics };

// Simulation accepts any p in (0,1) (and the degenerate endpoints 0, 1 which
// simulate fine); asymptotics additionally requires p < 1/2. Returns a note
// ("supercritical") for p >= 1/2 under Simulation. Throws ContractError.
std::string validate_params(const ModelParams& params, Purpose purpose);

}  // namespace tlq
