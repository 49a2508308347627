// SPDX-License-Identifier: Apache-2.0
#include "copo/detector.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <future>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace copo {

void DetectorConfig::validate() const {
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (vertex_tol < 0.0) throw std::invalid_argument("vertex_tol must be >= 0");
    power.validate();
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Copositive:
            return "Copositive";
        case Status::NotCopositive:
            return "NotCopositive";
        default:
            return "Undecided";
    }
}

std::pair<Simplex, Simplex> bisect(const Simplex& s) {
    const std::size_t n = s.dim();
    double best = -1.0;
    std::size_t p = 0, q = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double d = s.matrix().at(k, i) - s.matrix().at(k, j);
                d2 += d * d;
            }
            if (d2 > best) {
                best = d2;
                p = i;
                q = j;
            }
        }
    }
    if (!(best > 0.0)) throw std::invalid_argument("cannot bisect a degenerate simplex");

    std::vector<double> mid(n);
    for (std::size_t k = 0; k < n; ++k) {
        mid[k] = 0.5 * (s.matrix().at(k, p) + s.matrix().at(k, q));
    }
    return {s.with_vertex(p, mid), s.with_vertex(q, mid)};
}

namespace {

struct NodeEval {
    // first vertex whose form value is certifiably below -vertex_tol
    std::optional<std::size_t> negative_vertex;
    bool member = false;
};

NodeEval evaluate_node(const SymTensor& a, const Simplex& s, const DetectorConfig& cfg) {
    NodeEval ev;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const auto [value, err] = a.eval_form_certified(s.vertex(i));
        // accept the witness only when rounding cannot explain the sign
        if (value < -(cfg.vertex_tol + err)) {
            ev.negative_vertex = i;
            return ev;
        }
    }
    ev.member = member(a.congruence(s.matrix()), cfg.cone, cfg.power, cfg.membership_slack);
    return ev;
}

// Minimal pool that memoizes node evaluations by id so the DFS below can
// consume them in its exact serial order.
class EvalPool {
public:
    EvalPool(const SymTensor& a, const DetectorConfig& cfg, unsigned threads)
        : a_(a), cfg_(cfg) {
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const unsigned count = threads == 0 ? hw : threads;
        for (unsigned t = 0; t < count; ++t) {
            workers_.emplace_back([this] { work(); });
        }
    }

    ~EvalPool() {
        {
            std::lock_guard lock(mu_);
            stop_ = true;
            queue_.clear();
        }
        cv_.notify_all();
        for (auto& w : workers_) w.join();
    }

    void schedule(std::uint64_t id, const Simplex& s) {
        auto task = std::make_shared<std::packaged_task<NodeEval()>>(
            [this, s] { return evaluate_node(a_, s, cfg_); });
        {
            std::lock_guard lock(mu_);
            futures_.emplace(id, task->get_future());
            queue_.push_back([task] { (*task)(); });
        }
        cv_.notify_one();
    }

    NodeEval take(std::uint64_t id) {
        std::future<NodeEval> f;
        {
            std::lock_guard lock(mu_);
            auto it = futures_.find(id);
            f = std::move(it->second);
            futures_.erase(it);
        }
        return f.get();
    }

private:
    void work() {
        for (;;) {
            std::function<void()> job;
            {
                std::unique_lock lock(mu_);
                cv_.wait(lock, [this] { return stop_ || !queue_.empty(); });
                if (stop_) return;
                job = std::move(queue_.front());
                queue_.pop_front();
            }
            job();
        }
    }

    const SymTensor& a_;
    const DetectorConfig& cfg_;
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<std::function<void()>> queue_;
    std::unordered_map<std::uint64_t, std::future<NodeEval>> futures_;
    bool stop_ = false;
    std::vector<std::thread> workers_;
};

struct Node {
    Simplex simplex;
    std::size_t depth;
    std::uint64_t id;
};

}  // namespace

Verdict detect(const SymTensor& a, const DetectorConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    Verdict out;
    std::vector<Node> stack;
    std::uint64_t next_id = 0;
    stack.push_back({Simplex::standard(a.dim()), 0, next_id++});

    std::unique_ptr<EvalPool> pool;
    if (cfg.parallel) {
        pool = std::make_unique<EvalPool>(a, cfg, cfg.threads);
        pool->schedule(stack.back().id, stack.back().simplex);
    }

    out.status = Status::Copositive;
    while (!stack.empty()) {
        if (out.stats.iterations >= cfg.max_iterations) {
            out.status = Status::Undecided;
            break;
        }
        ++out.stats.iterations;

        const Node node = stack.back();
        out.stats.max_depth = std::max(out.stats.max_depth, node.depth);

        const NodeEval ev =
            pool ? pool->take(node.id) : evaluate_node(a, node.simplex, cfg);

        if (ev.negative_vertex) {
            const auto v = node.simplex.vertex(*ev.negative_vertex);
            out.witness = std::vector<double>(v.begin(), v.end());
            out.status = Status::NotCopositive;
            break;
        }
        if (ev.member) {
            ++out.stats.simplices_checked;
            if (cfg.keep_partition_log) out.discarded.push_back(node.simplex);
            stack.pop_back();
            continue;
        }

        auto [pchild, qchild] = bisect(node.simplex);
        stack.pop_back();
        stack.push_back({std::move(pchild), node.depth + 1, next_id++});
        stack.push_back({std::move(qchild), node.depth + 1, next_id++});
        if (pool) {
            // q-child sits on top and is consumed next
            pool->schedule(stack.back().id, stack.back().simplex);
            pool->schedule(stack[stack.size() - 2].id, stack[stack.size() - 2].simplex);
        }
    }

    if (out.status == Status::Undecided && !stack.empty()) {
        std::size_t deepest = 0;
        for (std::size_t i = 1; i < stack.size(); ++i) {
            if (stack[i].depth >= stack[deepest].depth) deepest = i;
        }
        out.stats.remaining_diameter = stack[deepest].simplex.diameter();
    }
    if (cfg.keep_partition_log) {
        for (const Node& n : stack) out.remaining.push_back(n.simplex);
    }

    out.stats.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace copo
