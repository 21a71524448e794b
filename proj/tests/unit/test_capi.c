#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "janus/janus.h"

static int failures = 0;

#define EXPECT(cond)                                                              \
    do {                                                                          \
        if (!(cond)) {                                                            \
            fprintf(stderr, "%s:%d: check failed: %s (last error: %s)\n", __FILE__, \
                    __LINE__, #cond, janus_last_error());                         \
            ++failures;                                                           \
        }                                                                         \
    } while (0)

static janus_config* make_config(void) {
    janus_config* c = NULL;
    EXPECT(janus_config_create(&c) == JANUS_OK);
    return c;
}

static void test_prng(void) {
    FILE* f = fopen(JANUS_TEST_DATA "/prng_vectors.txt", "r");
    unsigned long long seed, k;
    unsigned int out;
    janus_prng* p = NULL;
    int n = 0;
    EXPECT(f != NULL);
    if (!f) return;
    EXPECT(janus_prng_create(0, &p) == JANUS_OK);
    while (n < 100 && fscanf(f, "seed=%llu k=%llu out=%x\n", &seed, &k, &out) == 3) {
        EXPECT(seed == 0);
        EXPECT(janus_prng_next(p) == out);
        ++n;
    }
    fclose(f);
    janus_prng_destroy(p);
    EXPECT(n == 100);
    EXPECT(janus_stream_seed(1, 0) != janus_stream_seed(1, 1));
    EXPECT(janus_prng_create(0, NULL) == JANUS_ERR_INVALID_ARGUMENT);
}

static void test_errors(void) {
    janus_config* c = make_config();
    EXPECT(janus_config_set(c, "model.L", "7") == JANUS_OK);
    EXPECT(janus_run(c, NULL) == JANUS_ERR_DOMAIN);
    EXPECT(strstr(janus_last_error(), "odd") != NULL || strlen(janus_last_error()) > 0);
    EXPECT(janus_config_set(c, "model.nonsense", "1") == JANUS_ERR_DOMAIN);
    EXPECT(strstr(janus_last_error(), "model.nonsense") != NULL);
    EXPECT(janus_config_set(NULL, "model.L", "4") == JANUS_ERR_INVALID_ARGUMENT);
    EXPECT(janus_config_load(c, "/nonexistent/file.cfg") == JANUS_ERR_IO);

    EXPECT(janus_config_set(c, "model.L", "4") == JANUS_OK);
    EXPECT(janus_config_set(c, "model.kind", "potts") == JANUS_OK);
    EXPECT(janus_config_set(c, "model.q", "3") == JANUS_OK);
    EXPECT(janus_config_set(c, "run.engine", "amsc") == JANUS_OK);
    EXPECT(janus_run(c, NULL) == JANUS_ERR_INCOMPATIBLE);

    double v = 0;
    EXPECT(janus_oracle(c, "energy", &v) == JANUS_ERR_TOO_LARGE);
    EXPECT(janus_oracle(c, "entropy", &v) == JANUS_ERR_DOMAIN);
    EXPECT(strcmp(janus_status_string(JANUS_ERR_PARSE), "") != 0);
    janus_config_destroy(c);
}

static void test_config_text(void) {
    janus_config* c = make_config();
    char* text = NULL;
    EXPECT(janus_config_set(c, "model.beta", "0.75") == JANUS_OK);
    EXPECT(janus_config_to_string(c, &text) == JANUS_OK);
    EXPECT(text && strstr(text, "beta = 0.75") != NULL);
    janus_string_free(text);
    janus_config_destroy(c);
}

static void test_run_and_oracle(void) {
    janus_config* c = make_config();
    janus_run_summary s;
    double exact = 0, fd = 0;
    EXPECT(janus_config_set(c, "model.couplings", JANUS_TEST_DATA "/ea-L2-s11.couplings") == JANUS_OK);
    EXPECT(janus_config_set(c, "model.L", "2") == JANUS_OK);
    EXPECT(janus_config_set(c, "model.beta", "0.5") == JANUS_OK);
    EXPECT(janus_config_set(c, "run.sweeps", "20000") == JANUS_OK);
    EXPECT(janus_config_set(c, "output.trajectory", "capi_trajectory.csv") == JANUS_OK);
    EXPECT(janus_config_set(c, "output.snapshot", "capi_final.snap") == JANUS_OK);
    EXPECT(janus_run(c, &s) == JANUS_OK);
    EXPECT(s.samples == 20001);
    EXPECT(s.sweeps == 20000);
    EXPECT(s.averaged == 10001);
    EXPECT(janus_oracle(c, "energy", &exact) == JANUS_OK);
    EXPECT(fabs(exact - -6.092753247646119105) < 1e-12);
    EXPECT(janus_oracle(c, "energy-fd", &fd) == JANUS_OK);
    EXPECT(fabs(fd - exact) < 1e-6);
    EXPECT(fabs(s.mean_energy - exact) < 5 * s.mean_energy_error);

    janus_snapshot_info info;
    double e = 0;
    EXPECT(janus_snapshot_read_info("capi_final.snap", &info) == JANUS_OK);
    EXPECT(strcmp(info.kind, "ising-ea") == 0);
    EXPECT(info.side == 2 && info.q == 2 && info.sites == 8);
    EXPECT(janus_snapshot_energy(c, "capi_final.snap", &e) == JANUS_OK);
    EXPECT(e == s.final_energy);

    FILE* bad = fopen("capi_bad.snap", "w");
    fputs("janus-snap v1 ising-ea 2 2\n11\n1\n", bad);
    fclose(bad);
    EXPECT(janus_snapshot_read_info("capi_bad.snap", &info) == JANUS_ERR_PARSE);
    EXPECT(strstr(janus_last_error(), "line 3") != NULL);
    janus_config_destroy(c);
}

static void count_check(const char* name, int passed, const char* detail, double seconds, void* user) {
    (void)name;
    (void)detail;
    (void)seconds;
    int* counts = (int*)user;
    ++counts[0];
    counts[1] += passed;
}

static void test_bench_and_color(void) {
    janus_config* c = make_config();
    janus_bench_result* r = NULL;
    janus_bench_params bp = {"scalar-hb,amsc", 2, 0.01};
    char* table = NULL;
    EXPECT(janus_config_set(c, "model.L", "8") == JANUS_OK);
    EXPECT(janus_bench(c, &bp, &r) == JANUS_OK);
    EXPECT(janus_bench_count(r) == 2);
    EXPECT(strcmp(janus_bench_engine(r, 1), "amsc") == 0);
    EXPECT(janus_bench_median_ns(r, 0) > 0);
    EXPECT(janus_bench_ratio(r, 0, 0) == 1.0);
    EXPECT(janus_bench_table(r, &table) == JANUS_OK);
    EXPECT(table && strstr(table, "NOT reproducible") != NULL);
    janus_string_free(table);
    janus_bench_destroy(r);
    bp.engines = "scalar-hb,warp";
    EXPECT(janus_bench(c, &bp, &r) == JANUS_ERR_DOMAIN);
    janus_config_destroy(c);

    janus_color_params cp;
    janus_color_result cr;
    memset(&cp, 0, sizeof cp);
    cp.vertices = 300;
    cp.connectivity = 2.0;
    cp.colors = 3;
    cp.seed = 4;
    cp.beta_start = 1.0;
    cp.beta_end = 6.0;
    cp.steps = 20;
    cp.sweeps_per_step = 50;
    EXPECT(janus_color(&cp, &cr) == JANUS_OK);
    EXPECT(cr.vertices == 300 && cr.edges == 300);
    EXPECT(cr.success == 1 && cr.best_energy == 0);
    EXPECT(cr.subsets >= 2);
    cp.graph_path = "/nonexistent.edges";
    EXPECT(janus_color(&cp, &cr) == JANUS_ERR_IO);
}

static void test_verify_fault(void) {
    int counts[2] = {0, 0};
    int all = 1;
    EXPECT(janus_verify("bogus", NULL, NULL, &all) == JANUS_ERR_INVALID_ARGUMENT);
    EXPECT(janus_verify("hb-table", count_check, counts, &all) == JANUS_OK);
    EXPECT(all == 0);
    EXPECT(counts[0] >= 12);
    EXPECT(counts[1] < counts[0]);
}

int main(void) {
    EXPECT(strlen(janus_version()) > 0);
    test_prng();
    test_errors();
    test_config_text();
    test_run_and_oracle();
    test_bench_and_color();
    test_verify_fault();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    puts("C API: all checks passed");
    return 0;
}
