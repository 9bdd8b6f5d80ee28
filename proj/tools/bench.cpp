// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
//
// Micro-benchmark comparing the serial reference code paths with the
// OpenMP-parallel ones.  Both paths produce identical results; the parallel
// speedup depends on the available cores.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "wcycle/estimates.hpp"
#include "wcycle/exec.hpp"
#include "wcycle/hilbert.hpp"
#include "wcycle/semigroup.hpp"

namespace {

double seconds(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

void report(const std::string& name, double serial, double parallel) {
    std::printf("%-38s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name.c_str(), serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    std::printf("worker threads: %d\n\n", wcycle::worker_count());

    {
        const int genus = 26;
        std::size_t count_serial = 0, count_parallel = 0;
        double ts = seconds([&] {
            count_serial = wcycle::enumerate_semigroups(genus, wcycle::Exec::serial, genus).size();
        });
        double tp = seconds([&] {
            count_parallel =
                wcycle::enumerate_semigroups(genus, wcycle::Exec::parallel, genus).size();
        });
        report("enumerate_semigroups(genus 26)", ts, tp);
        if (count_serial != count_parallel) {
            std::printf("MISMATCH: %zu vs %zu semigroups\n", count_serial, count_parallel);
            return 1;
        }
    }

    {
        const int genus = 13;
        std::size_t rows_serial = 0, rows_parallel = 0;
        double ts = seconds([&] {
            rows_serial = wcycle::estimates_table(genus, wcycle::AdmissibleVariant::minimum,
                                                  wcycle::Exec::serial)
                              .size();
        });
        double tp = seconds([&] {
            rows_parallel = wcycle::estimates_table(genus, wcycle::AdmissibleVariant::minimum,
                                                    wcycle::Exec::parallel)
                                .size();
        });
        report("estimates_table(genus 13)", ts, tp);
        if (rows_serial != rows_parallel) {
            std::printf("MISMATCH: %zu vs %zu rows\n", rows_serial, rows_parallel);
            return 1;
        }
    }

    {
        const int genus = 6, cap = 14;
        std::vector<long long> serial_values, parallel_values;
        double ts = seconds([&] {
            serial_values = wcycle::ev_image_hilbert(genus, cap, wcycle::EvConvention::complete,
                                                     wcycle::Exec::serial);
        });
        double tp = seconds([&] {
            parallel_values = wcycle::ev_image_hilbert(genus, cap, wcycle::EvConvention::complete,
                                                       wcycle::Exec::parallel);
        });
        report("ev_image_hilbert(genus 6, cap 14)", ts, tp);
        if (serial_values != parallel_values) {
            std::printf("MISMATCH in Hilbert values\n");
            return 1;
        }
    }

    return 0;
}
