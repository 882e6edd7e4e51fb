// Timing comparison of the serial reference scan against the OpenMP path,
// checking along the way that both produce identical reports.

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <string>

#include "muldep/io.hpp"

using namespace muldep;

namespace {

InstanceSpec make_instance(const char* H) {
    InstanceSpec inst;
    inst.polys = {Poly::from_strings({"1", "0", "-1"}), Poly::from_strings({"1", "0", "-4"})};
    inst.gamma = GroupSpec::from_rationals({mpq_class(2)});
    inst.epsilon = parse_rational("0.1");
    inst.height_bound = parse_rational(H);
    return inst;
}

double run_once(InstanceSpec inst, int workers, std::string* dump) {
    inst.workers = workers;
    double t0 = omp_get_wtime();
    ScanReport rep = scan_theorem12(inst);
    double dt = omp_get_wtime() - t0;
    if (dump) *dump = to_json(rep).dump();
    return dt;
}

} // namespace

int main(int argc, char** argv) {
    const char* H = "3.4";
    int reps = 3;
    for (int i = 1; i < argc; i++) {
        if (!std::strcmp(argv[i], "--quick")) {
            H = "2.3";
            reps = 1;
        }
        if (!std::strcmp(argv[i], "--H") && i + 1 < argc) H = argv[++i];
    }
    InstanceSpec inst = make_instance(H);
    int max_workers = omp_get_max_threads();

    std::string serial_json, parallel_json;
    double t_serial = 1e300, t_parallel = 1e300;
    for (int r = 0; r < reps; r++)
        t_serial = std::min(t_serial, run_once(inst, 1, r == 0 ? &serial_json : nullptr));
    for (int r = 0; r < reps; r++)
        t_parallel = std::min(t_parallel, run_once(inst, max_workers, r == 0 ? &parallel_json : nullptr));

    bool identical = serial_json == parallel_json;
    std::printf("scan H=%s  candidates ~ %zu bytes of report\n", H, serial_json.size());
    std::printf("serial   (1 worker)   : %8.3f s\n", t_serial);
    std::printf("parallel (%2d workers) : %8.3f s\n", max_workers, t_parallel);
    std::printf("speedup              : %8.2fx\n", t_serial / t_parallel);
    std::printf("reports identical    : %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
