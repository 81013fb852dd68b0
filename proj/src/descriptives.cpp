#include "threm/descriptives.hpp"

#include <algorithm>
#include <ostream>

#include "threm/io_util.hpp"

namespace threm {

namespace {

double median_of(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    if (n % 2 == 1) return static_cast<double>(v[n / 2]);
    return (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) / 2.0;
}

DescriptiveRow summarize(const std::vector<const HyperEvent*>& events) {
    DescriptiveRow r;
    r.n = events.size();
    std::vector<std::size_t> na, nk, nr;
    na.reserve(r.n);
    nk.reserve(r.n);
    nr.reserve(r.n);
    std::size_t key_nonempty = 0, ref_nonempty = 0;
    for (const auto* e : events) {
        na.push_back(e->authors().size());
        nk.push_back(e->keywords().size());
        nr.push_back(e->references().size());
        if (!e->keywords().empty()) ++key_nonempty;
        if (!e->references().empty()) ++ref_nonempty;
    }
    auto mean = [](const std::vector<std::size_t>& v) {
        double s = 0;
        for (auto x : v) s += static_cast<double>(x);
        return s / static_cast<double>(v.size());
    };
    r.auth_mean = mean(na);
    r.auth_med = median_of(na);
    r.auth_max = *std::max_element(na.begin(), na.end());
    r.key_mean = mean(nk);
    r.key_med = median_of(nk);
    r.key_max = *std::max_element(nk.begin(), nk.end());
    r.key_cov = 100.0 * static_cast<double>(key_nonempty) / static_cast<double>(r.n);
    r.ref_mean = mean(nr);
    r.ref_med = median_of(nr);
    r.ref_max = *std::max_element(nr.begin(), nr.end());
    r.ref_cov = 100.0 * static_cast<double>(ref_nonempty) / static_cast<double>(r.n);
    return r;
}

}  // namespace

std::vector<DescriptiveRow> descriptives(const EventSequence& seq) {
    if (seq.empty()) throw DataError("descriptives: empty event sequence");
    std::vector<DescriptiveRow> rows;
    std::vector<const HyperEvent*> group, all;
    all.reserve(seq.size());
    for (std::size_t i = 0; i < seq.events.size(); ++i) {
        const auto& e = seq.events[i];
        all.push_back(&e);
        if (!group.empty() && group.back()->t != e.t) {
            DescriptiveRow r = summarize(group);
            r.period = group.back()->t;
            rows.push_back(r);
            group.clear();
        }
        group.push_back(&e);
    }
    DescriptiveRow r = summarize(group);
    r.period = group.back()->t;
    rows.push_back(r);

    DescriptiveRow total = summarize(all);
    total.overall = true;
    rows.push_back(total);
    return rows;
}

void write_descriptives_csv(const std::vector<DescriptiveRow>& rows, std::ostream& out) {
    out << "period,n,auth_mean,auth_med,auth_max,key_mean,key_med,key_max,key_cov,"
           "ref_mean,ref_med,ref_max,ref_cov\n";
    for (const auto& r : rows) {
        if (r.overall)
            out << "overall";
        else
            out << fmt_double(r.period);
        out << ',' << r.n << ',' << fmt_double(r.auth_mean) << ',' << fmt_double(r.auth_med)
            << ',' << r.auth_max << ',' << fmt_double(r.key_mean) << ',' << fmt_double(r.key_med)
            << ',' << r.key_max << ',' << fmt_double(r.key_cov) << ',' << fmt_double(r.ref_mean)
            << ',' << fmt_double(r.ref_med) << ',' << r.ref_max << ',' << fmt_double(r.ref_cov)
            << '\n';
    }
}

}  // namespace threm
