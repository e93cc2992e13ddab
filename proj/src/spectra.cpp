#include "steklov/spectra.hpp"

#include <algorithm>
#include <queue>

#include "steklov/errors.hpp"

namespace steklov {

const char* unit_name(SpectrumUnit unit) {
    return unit == SpectrumUnit::PiScaled ? "pi" : "abs";
}

SpectrumUnit spectrum_unit_for(LengthUnit unit) {
    return unit == LengthUnit::Plain ? SpectrumUnit::PiScaled : SpectrumUnit::Absolute;
}

Length::Length(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (sgn(value_) <= 0) {
        throw DomainError("length must be positive, got " + to_string(value_));
    }
}

BoundaryData::BoundaryData(std::vector<Rational> type_one, std::vector<Rational> type_two, LengthUnit unit)
    : type_one_(std::move(type_one)), type_two_(std::move(type_two)), unit_(unit) {
    for (auto* side : {&type_one_, &type_two_}) {
        for (auto& v : *side) v = Length(v).value();
        std::sort(side->begin(), side->end());
    }
}

bool operator<(const BoundaryData& a, const BoundaryData& b) {
    if (a.unit_ != b.unit_) return a.unit_ < b.unit_;
    if (a.type_one_ != b.type_one_) {
        return std::lexicographical_compare(a.type_one_.begin(), a.type_one_.end(), b.type_one_.begin(),
                                            b.type_one_.end());
    }
    return std::lexicographical_compare(a.type_two_.begin(), a.type_two_.end(), b.type_two_.begin(),
                                        b.type_two_.end());
}

ArithmeticSpectrum::ArithmeticSpectrum(SpectrumUnit unit, std::uint64_t zeros, std::vector<Progression> progressions)
    : unit_(unit), zeros_(zeros) {
    for (auto& p : progressions) {
        p.difference.canonicalize();
        if (sgn(p.difference) <= 0) {
            throw DomainError("progression difference must be positive, got " + to_string(p.difference));
        }
        if (p.multiplicity == 0) {
            throw DomainError("progression multiplicity must be positive");
        }
    }
    std::sort(progressions.begin(), progressions.end(),
              [](const Progression& a, const Progression& b) { return a.difference < b.difference; });
    for (auto& p : progressions) {
        if (!progressions_.empty() && progressions_.back().difference == p.difference) {
            progressions_.back().multiplicity += p.multiplicity;
        } else {
            progressions_.push_back(std::move(p));
        }
    }
}

std::uint64_t ArithmeticSpectrum::total_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto& p : progressions_) total += p.multiplicity;
    return total;
}

void validate_view(const SpectrumView& view) {
    for (std::size_t i = 0; i < view.values.size(); ++i) {
        if (sgn(view.values[i]) < 0) {
            throw DomainError("spectrum values must be non-negative");
        }
        if (i > 0 && view.values[i] < view.values[i - 1]) {
            throw DomainError("spectrum values must be non-decreasing (index " + std::to_string(i) + ")");
        }
    }
}

ArithmeticSpectrum canonical_disk_spectrum(const Length& length, LengthUnit unit) {
    // 2*pi/l per step, twice each: cos and sin modes.
    return ArithmeticSpectrum(spectrum_unit_for(unit), 1, {{Rational(2) / length.value(), 2}});
}

ArithmeticSpectrum canonical_half_disk_spectrum(const Length& length, LengthUnit unit) {
    // Reflection-invariant modes of the disk of circumference 2*l: simple.
    return ArithmeticSpectrum(spectrum_unit_for(unit), 1, {{Rational(1) / length.value(), 1}});
}

ArithmeticSpectrum canonical_spectrum(const BoundaryData& data) {
    std::vector<Progression> progressions;
    progressions.reserve(data.r() + data.s());
    for (const auto& l : data.type_one()) {
        progressions.push_back({Rational(2) / l, 2});
    }
    for (const auto& l : data.type_two()) {
        progressions.push_back({Rational(1) / l, 1});
    }
    return ArithmeticSpectrum(spectrum_unit_for(data.unit()), data.r() + data.s(), std::move(progressions));
}

ArithmeticSpectrum disjoint_union(const ArithmeticSpectrum& a, const ArithmeticSpectrum& b) {
    if (a.unit() != b.unit()) throw DomainError("cannot merge spectra with different units");
    std::vector<Progression> all = a.progressions();
    all.insert(all.end(), b.progressions().begin(), b.progressions().end());
    return ArithmeticSpectrum(a.unit(), a.zeros() + b.zeros(), std::move(all));
}

SpectrumView enumerate(const ArithmeticSpectrum& spectrum, std::size_t n) {
    if (n == 0) throw DomainError("enumerate needs n >= 1");

    SpectrumView view{spectrum.unit(), {}};
    view.values.reserve(n);
    for (std::uint64_t i = 0; i < spectrum.zeros() && view.values.size() < n; ++i) {
        view.values.emplace_back(0);
    }

    struct Head {
        Rational value;
        std::size_t index;
        std::uint64_t step;
    };
    auto later = [](const Head& a, const Head& b) {
        int c = cmp(a.value, b.value);
        return c != 0 ? c > 0 : a.index > b.index;
    };
    std::priority_queue<Head, std::vector<Head>, decltype(later)> heads(later);
    const auto& progs = spectrum.progressions();
    for (std::size_t i = 0; i < progs.size(); ++i) heads.push({progs[i].difference, i, 1});

    while (view.values.size() < n && !heads.empty()) {
        Rational value = heads.top().value;
        std::uint64_t copies = 0;
        while (!heads.empty() && heads.top().value == value) {
            Head h = heads.top();
            heads.pop();
            copies += progs[h.index].multiplicity;
            ++h.step;
            h.value = progs[h.index].difference * h.step;
            heads.push(std::move(h));
        }
        for (std::uint64_t c = 0; c < copies && view.values.size() < n; ++c) view.values.push_back(value);
    }
    return view;
}

bool spectra_equal(const ArithmeticSpectrum& a, const ArithmeticSpectrum& b) {
    if (a.unit() != b.unit()) {
        throw DomainError(std::string("unit mismatch: ") + unit_name(a.unit()) + " vs " + unit_name(b.unit()));
    }
    return a == b;
}

}  // namespace steklov
