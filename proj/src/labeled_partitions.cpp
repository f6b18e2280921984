#include "stablerep/labeled_partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace stablerep {

namespace {

void require_enumeration_budget(int p, const Budget& budget) {
    if (p < 0) throw Error(ErrorKind::InvalidArgument, "negative ground set size");
    if (p > budget.max_enumeration_degree) {
        throw Error(ErrorKind::SizeBudgetExceeded, "labeled partitions of " + std::to_string(p) +
                                                       " elements exceed the enumeration bound " +
                                                       std::to_string(budget.max_enumeration_degree));
    }
}

/// Orders (part, label) pairs by part minimum.
template <class Labeled>
Labeled canonical_labeled(SetPartition parts, std::vector<int> labels) {
    std::vector<std::pair<std::vector<int>, int>> paired;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::sort(parts[k].begin(), parts[k].end());
        paired.emplace_back(std::move(parts[k]), labels[k]);
    }
    std::sort(paired.begin(), paired.end(), [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
    Labeled out;
    for (auto& [part, label] : paired) {
        out.base.push_back(std::move(part));
        out.labels.push_back(label);
    }
    return out;
}

int permute_label(const Permutation& tau, int label) {
    if (label == 0 || tau.empty()) return label;
    return tau.at(label - 1) + 1;
}

template <class Labeled>
Labeled act_impl(const Permutation& sigma, const Permutation& tau, const Labeled& x) {
    SetPartition parts;
    std::vector<int> labels;
    for (std::size_t k = 0; k < x.base.size(); ++k) {
        std::vector<int> image;
        for (int e : x.base[k]) image.push_back(sigma.at(e));
        parts.push_back(std::move(image));
        labels.push_back(permute_label(tau, x.labels[k]));
    }
    return canonical_labeled<Labeled>(std::move(parts), std::move(labels));
}

struct ParsedLabeled {
    SetPartition parts;
    std::vector<std::string> labels;
};

int parse_int(std::string_view token, std::string_view context) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::InvalidArgument, "bad integer '" + std::string(token) + "' in '" + std::string(context) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

ParsedLabeled parse_text(std::string_view text) {
    const std::size_t close = text.find('}');
    if (text.empty() || text.front() != '{' || close == std::string_view::npos) {
        throw Error(ErrorKind::InvalidArgument, "labeled partition must look like {1,2|3}:labels=1,*; got '" + std::string(text) + "'");
    }
    ParsedLabeled out;
    const std::string_view body = text.substr(1, close - 1);
    if (!body.empty()) {
        for (auto part_text : split(body, '|')) {
            std::vector<int> part;
            for (auto token : split(part_text, ',')) part.push_back(parse_int(token, text) - 1);
            out.parts.push_back(std::move(part));
        }
    }
    std::string_view rest = text.substr(close + 1);
    constexpr std::string_view prefix = ":labels=";
    if (rest.empty()) {
        out.labels.assign(out.parts.size(), "*");
    } else if (rest.substr(0, prefix.size()) == prefix) {
        for (auto token : split(rest.substr(prefix.size()), ',')) out.labels.emplace_back(token);
    } else {
        throw Error(ErrorKind::InvalidArgument, "unexpected suffix '" + std::string(rest) + "'");
    }
    if (out.labels.size() != out.parts.size()) {
        throw Error(ErrorKind::InvalidArgument, "need one label per part in '" + std::string(text) + "'");
    }
    // parts must cover 0..p-1 exactly once
    std::vector<int> all;
    for (const auto& part : out.parts) {
        if (part.empty()) throw Error(ErrorKind::InvalidArgument, "empty part in '" + std::string(text) + "'");
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (all[k] != static_cast<int>(k)) {
            throw Error(ErrorKind::InvalidArgument, "parts of '" + std::string(text) + "' do not partition {1..p}");
        }
    }
    return out;
}

std::string format_parts(const SetPartition& base) {
    std::string out = "{";
    for (std::size_t k = 0; k < base.size(); ++k) {
        if (k) out += '|';
        for (std::size_t t = 0; t < base[k].size(); ++t) {
            if (t) out += ',';
            out += std::to_string(base[k][t] + 1);
        }
    }
    return out + "}";
}

std::string join_labels(const std::vector<std::string>& names) {
    if (std::all_of(names.begin(), names.end(), [](const auto& n) { return n == "*"; })) return "";
    std::string out = ":labels=";
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (k) out += ',';
        out += names[k];
    }
    return out;
}

void validate_q_labels(const QLabeledPartition& x) {
    std::set<int> seen;
    for (int l : x.labels) {
        if (l < 0) throw Error(ErrorKind::InvalidArgument, "negative label");
        if (l > 0 && !seen.insert(l).second) {
            throw Error(ErrorKind::InvalidArgument, "label " + std::to_string(l) + " used on two parts");
        }
    }
}

}  // namespace

std::vector<SetPartition> enumerate_set_partitions(int p) {
    std::vector<SetPartition> out;
    SetPartition current;
    std::function<void(int)> rec = [&](int element) {
        if (element == p) {
            out.push_back(current);
            return;
        }
        for (std::size_t k = 0; k < current.size(); ++k) {
            current[k].push_back(element);
            rec(element + 1);
            current[k].pop_back();
        }
        current.push_back({element});
        rec(element + 1);
        current.pop_back();
    };
    rec(0);
    return out;
}

SetPartition canonical_set_partition(SetPartition parts) {
    for (auto& part : parts) std::sort(part.begin(), part.end());
    std::erase_if(parts, [](const auto& part) { return part.empty(); });
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return parts;
}

LabelAlphabet::LabelAlphabet(std::vector<std::vector<std::string>> per_size) : per_size_(std::move(per_size)) {
    if (per_size_.empty()) throw Error(ErrorKind::InvalidArgument, "label alphabet needs at least one size");
    for (const auto& alphabet : per_size_) {
        if (alphabet.empty()) throw Error(ErrorKind::InvalidArgument, "empty label alphabet");
    }
}

LabelAlphabet LabelAlphabet::standard(int q) {
    if (q < 0) throw Error(ErrorKind::InvalidArgument, "q must be non-negative");
    std::vector<std::string> first{"*"};
    for (int k = 1; k <= q; ++k) first.push_back(std::to_string(k));
    LabelAlphabet alphabet({first, {"*"}});
    alphabet.q_ = q;
    return alphabet;
}

std::size_t LabelAlphabet::size_for(int part_size) const {
    const std::size_t slot = std::min<std::size_t>(static_cast<std::size_t>(part_size - 1), per_size_.size() - 1);
    return per_size_[slot].size();
}

const std::string& LabelAlphabet::name(int part_size, int index) const {
    const std::size_t slot = std::min<std::size_t>(static_cast<std::size_t>(part_size - 1), per_size_.size() - 1);
    return per_size_[slot].at(static_cast<std::size_t>(index));
}

int LabelAlphabet::index_of(int part_size, std::string_view label) const {
    const std::size_t slot = std::min<std::size_t>(static_cast<std::size_t>(part_size - 1), per_size_.size() - 1);
    const auto& alphabet = per_size_[slot];
    auto it = std::find(alphabet.begin(), alphabet.end(), label);
    if (it == alphabet.end()) {
        throw Error(ErrorKind::InvalidArgument, "label '" + std::string(label) + "' not allowed on a part of size " + std::to_string(part_size));
    }
    return static_cast<int>(it - alphabet.begin());
}

int ground_set_size(const SetPartition& base) {
    int n = 0;
    for (const auto& part : base) n += static_cast<int>(part.size());
    return n;
}

std::vector<GeneralLabeledPartition> enumerate_general(int p, const LabelAlphabet& alphabet, const Budget& budget) {
    require_enumeration_budget(p, budget);
    std::vector<GeneralLabeledPartition> out;
    for (const auto& base : enumerate_set_partitions(p)) {
        std::vector<int> labels(base.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == base.size()) {
                out.push_back({base, labels});
                return;
            }
            const std::size_t options = alphabet.size_for(static_cast<int>(base[k].size()));
            for (std::size_t l = 0; l < options; ++l) {
                labels[k] = static_cast<int>(l);
                rec(k + 1);
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QLabeledPartition> enumerate_p_labels(int p, const std::vector<int>& label_set, const Budget& budget) {
    require_enumeration_budget(p, budget);
    std::vector<QLabeledPartition> out;
    const std::size_t count = label_set.size();
    for (const auto& base : enumerate_set_partitions(p)) {
        if (base.size() < count) continue;
        std::vector<int> labels(base.size(), 0);
        // assign label_set[t] to a distinct part, t = 0..count-1
        std::function<void(std::size_t)> rec = [&](std::size_t t) {
            if (t == count) {
                out.push_back({base, labels});
                return;
            }
            for (std::size_t k = 0; k < base.size(); ++k) {
                if (labels[k] != 0) continue;
                labels[k] = label_set[t];
                rec(t + 1);
                labels[k] = 0;
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QLabeledPartition> enumerate_pq(int p, int q, const Budget& budget) {
    if (q < 0 || q > p) {
        throw Error(ErrorKind::InvalidArgument, "P_{p,q} needs 0 <= q <= p, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
    }
    std::vector<int> labels(q);
    for (int k = 0; k < q; ++k) labels[k] = k + 1;
    return enumerate_p_labels(p, labels, budget);
}

GeneralLabeledPartition act(const Permutation& sigma, const Permutation& tau, const GeneralLabeledPartition& x) {
    return act_impl(sigma, tau, x);
}

QLabeledPartition act(const Permutation& sigma, const Permutation& tau, const QLabeledPartition& x) {
    return act_impl(sigma, tau, x);
}

GeneralLabeledPartition splitting_map(const QLabeledPartition& x) {
    validate_q_labels(x);
    SetPartition parts;
    std::vector<int> labels;
    for (std::size_t k = 0; k < x.base.size(); ++k) {
        if (x.labels[k] == 0) {
            parts.push_back(x.base[k]);
            labels.push_back(0);
            continue;
        }
        for (int e : x.base[k]) {
            parts.push_back({e});
            labels.push_back(x.labels[k]);
        }
    }
    return canonical_labeled<GeneralLabeledPartition>(std::move(parts), std::move(labels));
}

std::size_t fixed_point_count(const std::vector<GeneralLabeledPartition>& elements, const Permutation& sigma, const Permutation& tau) {
    return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [&](const auto& x) { return act(sigma, tau, x) == x; }));
}

std::size_t fixed_point_count(const std::vector<QLabeledPartition>& elements, const Permutation& sigma, const Permutation& tau) {
    return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [&](const auto& x) { return act(sigma, tau, x) == x; }));
}

BiClassFunction permutation_bicharacter(int p, int q, BicharacterSource source, const Budget& budget) {
    BiClassFunction out(p, q);
    auto fill = [&](const auto& elements) {
        for (const auto& s : conjugacy_classes(p)) {
            const Permutation sigma = cycle_type_representative(s);
            for (const auto& t : conjugacy_classes(q)) {
                out(s, t) = static_cast<unsigned long>(fixed_point_count(elements, sigma, cycle_type_representative(t)));
            }
        }
    };
    if (source == BicharacterSource::General) fill(enumerate_general(p, LabelAlphabet::standard(q), budget));
    else fill(enumerate_pq(p, q, budget));
    return out;
}

BiClassFunction induced_splitting_bicharacter(int p, int q, const Budget& budget) {
    BiClassFunction total(p, q);
    for (int i = 0; i <= q; ++i) {
        if (i > p) break;  // P_{p,i} is empty once i exceeds p
        total += induce_second_factor(permutation_bicharacter(p, i, BicharacterSource::LabeledPQ, budget), q);
    }
    return total;
}

std::string format_labeled(const GeneralLabeledPartition& x, const LabelAlphabet& alphabet) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < x.base.size(); ++k) names.push_back(alphabet.name(static_cast<int>(x.base[k].size()), x.labels[k]));
    return format_parts(x.base) + join_labels(names);
}

std::string format_labeled(const QLabeledPartition& x) {
    std::vector<std::string> names;
    for (int l : x.labels) names.push_back(l == 0 ? "*" : std::to_string(l));
    return format_parts(x.base) + join_labels(names);
}

GeneralLabeledPartition parse_general_labeled(std::string_view text, const LabelAlphabet& alphabet) {
    ParsedLabeled parsed = parse_text(text);
    std::vector<int> labels;
    for (std::size_t k = 0; k < parsed.parts.size(); ++k) {
        labels.push_back(alphabet.index_of(static_cast<int>(parsed.parts[k].size()), parsed.labels[k]));
    }
    return canonical_labeled<GeneralLabeledPartition>(std::move(parsed.parts), std::move(labels));
}

QLabeledPartition parse_q_labeled(std::string_view text) {
    ParsedLabeled parsed = parse_text(text);
    std::vector<int> labels;
    for (const auto& name : parsed.labels) {
        if (name == "*") labels.push_back(0);
        else {
            const int l = parse_int(name, text);
            if (l < 1) throw Error(ErrorKind::InvalidArgument, "labels are positive integers or *");
            labels.push_back(l);
        }
    }
    QLabeledPartition x = canonical_labeled<QLabeledPartition>(std::move(parsed.parts), std::move(labels));
    validate_q_labels(x);
    return x;
}

json labeled_to_json(const GeneralLabeledPartition& x, const LabelAlphabet& alphabet) {
    json out = json::array();
    for (std::size_t k = 0; k < x.base.size(); ++k) {
        std::vector<int> part;
        for (int e : x.base[k]) part.push_back(e + 1);
        out.push_back({{"part", part}, {"label", alphabet.name(static_cast<int>(x.base[k].size()), x.labels[k])}});
    }
    return out;
}

json labeled_to_json(const QLabeledPartition& x) {
    json out = json::array();
    for (std::size_t k = 0; k < x.base.size(); ++k) {
        std::vector<int> part;
        for (int e : x.base[k]) part.push_back(e + 1);
        out.push_back({{"part", part}, {"label", x.labels[k] == 0 ? std::string("*") : std::to_string(x.labels[k])}});
    }
    return out;
}

namespace {

std::string text_from_json(const json& j) {
    std::string body = "{";
    std::string labels = ":labels=";
    bool first = true;
    for (const auto& entry : j) {
        if (!first) {
            body += '|';
            labels += ',';
        }
        first = false;
        bool first_element = true;
        for (int e : entry.at("part")) {
            if (!first_element) body += ',';
            first_element = false;
            body += std::to_string(e);
        }
        labels += entry.at("label").get<std::string>();
    }
    body += '}';
    return j.empty() ? body : body + labels;
}

}  // namespace

GeneralLabeledPartition general_labeled_from_json(const json& j, const LabelAlphabet& alphabet) {
    return parse_general_labeled(text_from_json(j), alphabet);
}

QLabeledPartition q_labeled_from_json(const json& j) { return parse_q_labeled(text_from_json(j)); }

}  // namespace stablerep
