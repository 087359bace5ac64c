#include "tlq/model.hpp"

#include <algorithm>

namespace tlq {

Schedule Schedule::blocks(int ell) {
    if (ell < 1) throw ParseError("block length must be >= 1, got " + std::to_string(ell));
    Schedule s;
    s.kind_ = Kind::Blocks;
    s.ell_ = ell;
    return s;
}

Schedule Schedule::pattern(const std::string& word) {
    if (word.empty()) throw ParseError("pattern word is empty");
    for (size_t i = 0; i < word.size(); i++) {
        if (word[i] != 'R' && word[i] != 'G')
            throw ParseError("invalid character '" + std::string(1, word[i]) +
                             "' in pattern at position " + std::to_string(i + 1));
    }
    // R^l G^l is the same schedule as block:l; canonicalize.
    if (word.size() % 2 == 0) {
        size_t l = word.size() / 2;
        bool is_block = true;
        for (size_t i = 0; i < word.size(); i++) {
            char want = i < l ? 'R' : 'G';
            if (word[i] != want) { is_block = false; break; }
        }
        if (is_block) return blocks(static_cast<int>(l));
    }
    Schedule s;
    s.kind_ = Kind::Pattern;
    s.word_ = word;
    return s;
}

Schedule Schedule::random_lights() {
    Schedule s;
    s.kind_ = Kind::RandomLights;
    return s;
}

bool Schedule::degenerate() const {
    if (kind_ != Kind::Pattern) return false;
    bool r = word_.find('R') != std::string::npos;
    bool g = word_.find('G') != std::string::npos;
    return !(r && g);
}

Phase Schedule::phase_at(std::uint64_t i) const {
    if (i < 1) throw ContractError("step index is 1-based");
    switch (kind_) {
        case Kind::Blocks:
            return ((i - 1) % (2ull * ell_)) < static_cast<std::uint64_t>(ell_) ? Phase::Red
                                                                                : Phase::Green;
        case Kind::Pattern:
            return word_[(i - 1) % word_.size()] == 'R' ? Phase::Red : Phase::Green;
        case Kind::RandomLights:
            throw ContractError("random lights have no deterministic phase");
    }
    throw ContractError("unreachable");
}

std::uint64_t Schedule::red_count(std::uint64_t n) const {
    switch (kind_) {
        case Kind::Blocks: {
            std::uint64_t period = 2ull * ell_;
            std::uint64_t full = n / period, rem = n % period;
            return full * ell_ + std::min<std::uint64_t>(rem, ell_);
        }
        case Kind::Pattern: {
            std::uint64_t per = 0;
            for (char c : word_)
                if (c == 'R') per++;
            std::uint64_t full = n / word_.size(), rem = n % word_.size();
            std::uint64_t extra = 0;
            for (std::uint64_t i = 0; i < rem; i++)
                if (word_[i] == 'R') extra++;
            return full * per + extra;
        }
        case Kind::RandomLights:
            return n;  // every step can be red; upper bound
    }
    return n;
}

std::string Schedule::render() const {
    switch (kind_) {
        case Kind::Blocks: return "block:" + std::to_string(ell_);
        case Kind::Pattern: return "pattern:" + word_;
        case Kind::RandomLights: return "random";
    }
    return "";
}

bool Schedule::operator==(const Schedule& o) const {
    return kind_ == o.kind_ && ell_ == o.ell_ && word_ == o.word_;
}

Schedule parse_schedule(const std::string& spec) {
    if (spec == "random") return Schedule::random_lights();
    if (spec.rfind("block:", 0) == 0) {
        std::string rest = spec.substr(6);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed block length in '" + spec + "' at position 7");
        long v = std::stol(rest);
        if (v < 1) throw ParseError("block length must be >= 1 in '" + spec + "'");
        return Schedule::blocks(static_cast<int>(v));
    }
    if (spec.rfind("pattern:", 0) == 0) {
        std::string word = spec.substr(8);
        for (size_t i = 0; i < word.size(); i++) {
            if (word[i] != 'R' && word[i] != 'G')
                throw ParseError("invalid character '" + std::string(1, word[i]) + "' in '" +
                                 spec + "' at position " + std::to_string(9 + i));
        }
        return Schedule::pattern(word);
    }
    throw ParseError("unrecognized schedule '" + spec +
                     "' (want block:<int>, pattern:<word>, or random)");
}

std::string validate_params(const ModelParams& params, Purpose purpose) {
    if (params.ell < 1) throw ContractError("ell must be >= 1");
    if (params.q != Rat(1) - params.p) throw ContractError("q must equal 1 - p exactly");
    if (purpose == Purpose::Asymptotics) {
        if (params.p <= 0 || params.p >= 1)
            throw ContractError("p must lie in (0,1), got " + to_string(params.p));
        if (params.p >= params.q)
            throw ContractError("asymptotics require p < q = 1-p (got p = " +
                                to_string(params.p) + "; q - p vanishes at p = 1/2)");
        return "";
    }
    if (params.p < 0 || params.p > 1)
        throw ContractError("p must lie in [0,1], got " + to_string(params.p));
    if (params.p >= params.q) return "supercritical: p >= 1/2, the queue maximum grows linearly";
    return "";
}

}  // namespace tlq
