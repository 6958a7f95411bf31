#pragma once
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace wb {

// worker cap: WORKBENCH_THREADS env var, else hardware concurrency
inline int max_threads() {
	if (const char* e = std::getenv("WORKBENCH_THREADS")) {
		int n = std::atoi(e);
		if (n >= 1) return n;
	}
	unsigned hc = std::thread::hardware_concurrency();
	return hc ? int(hc) : 1;
}

// run f(i) for i in [0,n); results must be written to pre-sized slots so the
// aggregation order stays deterministic
inline void parallel_for(int n, const std::function<void(int)>& f) {
	int nt = std::min(max_threads(), n);
	if (nt <= 1) {
		for (int i = 0; i < n; i++) f(i);
		return;
	}
	std::vector<std::thread> pool;
	for (int t = 0; t < nt; t++)
		pool.emplace_back([&, t] {
			for (int i = t; i < n; i += nt) f(i);
		});
	for (auto& th : pool) th.join();
}

} // namespace wb
