#include "tripres/search.hpp"

#include "tripres/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tripres {

namespace {

int effective_target(const ProjectivePlane& pl, const SearchConfig& config) {
    return config.target > 0 ? config.target : (pl.q + 1) * pl.n;
}

bool hits_target(const CoverResult& cover, int target) {
    return cover.status == CoverResult::Status::SUCCESS && cover.score >= target;
}

// the w highest-badness points, ranked by badness descending then index
// ascending, returned in ascending index order for the scan
std::vector<int> worst_points(const ProjectivePlane& pl, const CoverResult& cover,
                              const SearchConfig& config) {
    std::vector<int> bad = badness(pl, cover.uncovered, config.badness_mode);
    std::vector<int> order(pl.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int p, int q) { return bad[p] > bad[q]; });
    int w = std::min<int>(std::max(config.worst_points, 1), pl.n);
    order.resize(w);
    std::sort(order.begin(), order.end());
    return order;
}

} // namespace

SearchState make_search_state(const ProjectivePlane& pl,
                              const PointLineCorrespondence& start) {
    SearchState state;
    state.current = start;
    state.current_cover = estimated_score(pl, start);
    state.visited.insert(start.image);
    state.best_score = state.current_cover.score;
    state.trace.emplace_back(0, state.current_cover.score);
    return state;
}

std::optional<SwapStep> best_swap_step(const ProjectivePlane& pl, const SearchState& state,
                                       const SearchConfig& config) {
    std::optional<SwapStep> best;

    auto consider = [&](int a, int b) {
        std::vector<int> img = state.current.image;
        std::swap(img[a], img[b]);
        if (state.visited.count(img)) return;
        PointLineCorrespondence lam = make_correspondence(pl, std::move(img));
        CoverResult cover = estimated_score(pl, lam);
        // strict > keeps the first maximum; scanning in ascending (a,b)
        // makes that the lexicographically least one
        if (!best || cover.score > best->cover.score)
            best = SwapStep{a, b, std::move(lam), std::move(cover)};
    };

    if (config.variant == SearchVariant::FULL_SCAN) {
        // swapping is symmetric, so a < b covers every unordered neighbor
        // and yields the same argmax and tie-break as the ordered scan
        for (int a = 0; a < pl.n; ++a)
            for (int b = a + 1; b < pl.n; ++b) consider(a, b);
    } else {
        for (int a : worst_points(pl, state.current_cover, config))
            for (int b = 0; b < pl.n; ++b)
                if (b != a) consider(a, b);
    }
    return best;
}

SearchOutcome run_search(const ProjectivePlane& pl, const PointLineCorrespondence& start,
                         const SearchConfig& config) {
    const int target = effective_target(pl, config);
    SearchState state = make_search_state(pl, start);

    SearchOutcome out;
    out.lam = state.current;
    out.best_score = state.best_score;

    auto finish = [&](SearchOutcome::Status status) {
        out.status = status;
        out.visited_count = state.visited.size();
        out.trace = std::move(state.trace);
        return std::move(out);
    };

    if (hits_target(state.current_cover, target)) {
        out.tri = from_cover(state.current, state.current_cover);
        return finish(SearchOutcome::Status::FOUND);
    }

    long long stalled_for = 0;
    for (long long step = 1; step <= config.max_steps; ++step) {
        std::optional<SwapStep> next = best_swap_step(pl, state, config);
        if (!next) return finish(SearchOutcome::Status::STALLED);  // exhausted

        state.current = std::move(next->lam);
        state.current_cover = std::move(next->cover);
        state.visited.insert(state.current.image);
        state.trace.emplace_back(step, state.current_cover.score);

        if (state.current_cover.score > state.best_score) {
            state.best_score = state.current_cover.score;
            out.lam = state.current;
            out.best_score = state.best_score;
            stalled_for = 0;
        } else {
            ++stalled_for;
        }

        if (hits_target(state.current_cover, target)) {
            out.lam = state.current;
            out.best_score = state.current_cover.score;
            out.tri = from_cover(state.current, state.current_cover);
            return finish(SearchOutcome::Status::FOUND);
        }
        if (stalled_for >= config.restart_after_stall)
            return finish(SearchOutcome::Status::STALLED);
    }
    return finish(SearchOutcome::Status::STALLED);
}

PointLineCorrespondence random_correspondence(const ProjectivePlane& pl, SplitMix64& rng) {
    std::vector<int> image(pl.n);
    std::iota(image.begin(), image.end(), 0);
    for (int i = pl.n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(image[i], image[j]);
    }
    return make_correspondence(pl, std::move(image));
}

std::vector<CensusRow> correlation_census(const ProjectivePlane& pl,
                                          std::optional<std::size_t> limit) {
    std::map<std::pair<int, int>, CensusRow> rows;
    ProjectivePlane d = dual(pl);
    std::size_t seen = 0;
    enumerate_plane_isos(pl, d, {}, {}, [&](const PlaneIso& iso) {
        Correlation c{iso.point_map, iso.line_map};
        auto [a, b] = correlation_ab(pl, c);
        CensusRow& row = rows[{a, b}];
        row.a = a;
        row.b = b;
        row.exact = exact_score_correlation(pl, c);
        row.count += 1;
        CoverResult cover = estimated_score(pl, correspondence_of(pl, c));
        row.mean_estimated += cover.score;  // sum for now, divided below
        if (cover.status == CoverResult::Status::FAIL) row.fails += 1;
        ++seen;
        return !limit || seen < *limit;
    });

    std::vector<CensusRow> out;
    out.reserve(rows.size());
    for (auto& [key, row] : rows) {
        row.mean_estimated /= static_cast<double>(row.count);
        out.push_back(row);
    }
    return out;
}

} // namespace tripres
