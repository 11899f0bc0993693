#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsig/codec.hpp"
#include "fsig/error.hpp"
#include "fsig/io.hpp"
#include "fsig/laws.hpp"
#include "fsig/signal.hpp"

namespace {

using namespace fsig;

constexpr int kOk = 0;
constexpr int kLawFailure = 1;
constexpr int kInputError = 2;

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + fsig::to_string(v[k]);
  return out;
}

std::string interval(const Grid& g) {
  std::string out = "[" + std::to_string(g.start) + "," + std::to_string(g.end()) + ")";
  if (g.stride != 1) out += "/" + std::to_string(g.stride);
  return out;
}

std::string map_text(const IndexMap& phi) {
  return "i*" + std::to_string(phi.scale) + (phi.offset < 0 ? "" : "+") + std::to_string(phi.offset);
}

// Integer samples from a CSV or PGM file; images come back with rows/cols set.
struct Input {
  bool image = false;
  IntSignal signal;
  Image pixels;
};

Input load_integers(const std::string& path) {
  const auto bytes = read_bytes(path);
  Input in;
  switch (sniff(bytes)) {
    case FileKind::Pgm:
      in.image = true;
      in.pixels = parse_pgm(bytes);
      break;
    case FileKind::Csv:
      in.signal = to_int_signal(parse_csv(std::string(bytes.begin(), bytes.end())));
      break;
    case FileKind::Container: {
      const auto enc = read_container(bytes);
      if (enc.dims == 2) {
        in.image = true;
        in.pixels = decode_2d(enc);
      } else {
        in.signal = decode_1d(enc);
      }
      break;
    }
  }
  return in;
}

Signal load_signal(const std::string& path) {
  const auto bytes = read_bytes(path);
  if (sniff(bytes) == FileKind::Csv) return parse_csv(std::string(bytes.begin(), bytes.end()));
  const auto in = load_integers(path);
  return in.image ? to_signal(IntSignal{0, in.pixels.pixels}) : to_signal(in.signal);
}

int run_verify(std::uint64_t seed, std::size_t instances) {
  const auto start = std::chrono::steady_clock::now();
  const auto suites = run_all_laws(seed, instances);
  std::size_t failures = 0;
  std::cout << "seed=" << seed << "\ninstances=" << instances << "\n";
  for (const auto& suite : suites) {
    std::cout << "\n[" << suite.name() << "]\n";
    for (const auto& law : suite.laws()) {
      std::cout << law.name << ".checked=" << law.checked << "\n" << law.name << ".failed=" << law.failed << "\n";
      if (!law.passed()) std::cout << law.name << ".first_failure=" << law.first_failure << "\n";
    }
    failures += suite.failures();
  }
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  std::cout << "\nfailures=" << failures << "\nseconds=" << took.count() << "\n";
  return failures == 0 ? kOk : kLawFailure;
}

int run_analyze(const std::string& input, std::size_t segment_len, double tol, const std::vector<std::string>& detectors) {
  DetectorConfig config;
  config.translation = false;
  config.tol = Tolerance{tol};
  for (const auto& d : detectors) {
    if (d == "translation") config.translation = true;
    else if (d == "affine") config.affine = true;
    else if (d == "amp" || d == "amp-affine") config.amp_affine = true;
    else throw Error(ErrorCode::FormatError, "unknown detector '" + d + "'");
  }
  const auto signal = load_signal(input);
  if (signal.samples.empty()) throw Error(ErrorCode::EmptySignal, "no samples in " + input);
  const auto breaks = uniform_breakpoints(signal, segment_len);
  const auto report = redundancy_report(signal, breaks, config);

  std::cout << "input=" << input << "\nsamples=" << signal.samples.size() << "\norigin=" << signal.origin
            << "\nsegment_len=" << segment_len << "\nsegments=" << report.segments.size()
            << "\ntolerance=" << (std::isinf(tol) ? "inf" : std::to_string(tol)) << "\n";
  for (const auto& entry : report.entries) {
    const auto key = "segment." + std::to_string(entry.segment);
    std::cout << key << ".interval=" << interval(report.segments[entry.segment].grid()) << "\n";
    if (!entry.best) {
      std::cout << key << ".arrow=none\n";
      continue;
    }
    const auto& a = *entry.best;
    std::cout << key << ".source=" << a.source << "\n"
              << key << ".kind=" << to_string(a.kind) << "\n"
              << key << ".phi=" << map_text(a.phi) << "\n"
              << key << ".c=" << fsig::to_string(a.scale) << "\n"
              << key << ".residual_norm_squared=" << fsig::to_string(a.residual_norm_squared()) << "\n"
              << key << ".redundant=" << (entry.redundant ? "true" : "false") << "\n";
  }
  std::cout << "redundant_count=" << report.redundant_count << "\nredundant_fraction=" << report.redundant_fraction()
            << "\n";
  return kOk;
}

int run_encode(const std::string& input, const std::string& output, const std::string& policy_name,
               const EncodeOptions& options) {
  const auto policy = parse_policy(policy_name);
  if (!policy) throw Error(ErrorCode::PolicyMismatch, "unknown policy '" + policy_name + "'");
  const auto in = load_integers(input);
  const auto enc = in.image ? encode(in.pixels, *policy, options) : encode(in.signal, *policy, options);
  const auto bytes = write_container(enc);
  write_bytes(output, bytes);
  const auto raw = in.image ? in.pixels.pixels : in.signal.samples;
  const auto m = metrics(raw, enc);
  std::cout << "output=" << output << "\npolicy=" << to_string(*policy) << "\nsamples=" << m.samples
            << "\nrecords=" << enc.records.size() << "\nnonzero_deltas=" << m.nonzero_deltas
            << "\nencoded_bytes=" << bytes.size() << "\n";
  return kOk;
}

int run_decode(const std::string& input, const std::string& output) {
  const auto enc = read_container(read_bytes(input));
  if (enc.dims == 2) {
    write_bytes(output, format_pgm(decode_2d(enc)));
  } else {
    const auto text = format_csv(decode_1d(enc));
    write_bytes(output, std::vector<std::uint8_t>(text.begin(), text.end()));
  }
  std::cout << "output=" << output << "\nsamples=" << enc.sample_count() << "\n";
  return kOk;
}

int run_demo() {
  const Signal f{1, {1, 2, 3, 4, 5}};
  const auto d = prototype_decomposition(f);
  std::cout << "signal=" << join(f.samples) << "\norigin=" << f.origin << "\n";
  for (std::size_t k = 0; k < d.segments.size(); ++k)
    std::cout << "segment." << k + 1 << "=" << interval(d.segments[k].grid()) << ":" << join(d.segments[k].samples())
              << "\n";
  for (const auto& arrow : d.graph.arrows())
    std::cout << "arrow." << arrow.label << "=" << d.graph.objects()[arrow.data.source].label << "->"
              << d.graph.objects()[arrow.data.target].label << " phi=" << map_text(arrow.data.phi)
              << " delta=" << join(arrow.data.residual) << "\n";
  std::cout << "seed=" << fsig::to_string(d.seed) << "\ndelta_stream=" << join(d.deltas)
            << "\nsecond_deltas=" << join(d.second_deltas) << "\n";

  const auto laws = verify_functor_laws(d.graph);
  std::cout << "category=" << (laws.category_ok() ? "ok" : "failed")
            << "\ngroupoid=" << (laws.is_groupoid() ? "ok" : "failed") << "\n";
  for (const auto& failure : laws.failures) std::cout << "failure=" << failure << "\n";

  const std::vector<Rational> ones(4, Rational(1)), zeros(3, Rational(0));
  const bool ok = d.seed == 1 && d.deltas == ones && d.second_deltas == zeros && laws.is_groupoid();
  return ok ? kOk : kLawFailure;
}

int run_stats(const std::string& raw_path, const std::string& encoded_path) {
  const auto in = load_integers(raw_path);
  const auto enc = read_container(read_bytes(encoded_path));
  const auto m = metrics(in.image ? in.pixels.pixels : in.signal.samples, enc);
  std::cout << "samples=" << m.samples << "\ndelta_count=" << m.delta_count << "\nnonzero_deltas=" << m.nonzero_deltas
            << "\nnonzero_delta_fraction=" << m.nonzero_delta_fraction << "\nraw_entropy=" << m.raw_entropy
            << "\ndelta_entropy=" << m.delta_entropy << "\nencoded_bytes=" << m.encoded_bytes << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segment arrows, exact law checks and a lossless differential codec."};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::size_t instances = 100;
  auto* verify = app.add_subcommand("verify", "Run every law suite on random finite instances");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--instances", instances, "Instances per suite")->check(CLI::PositiveNumber);

  std::string input, output, second;
  std::size_t segment_len = 8;
  double tol = std::numeric_limits<double>::infinity();
  std::vector<std::string> detectors{"translation"};
  auto* analyze = app.add_subcommand("analyze", "Report redundant segments of a signal");
  analyze->add_option("input", input, "CSV, PGM or FSG1 file")->required();
  analyze->add_option("--segment-len", segment_len, "Samples per segment")->check(CLI::PositiveNumber);
  analyze->add_option("--tol", tol, "Accept arrows with residual l2 norm at most this");
  analyze->add_option("--detectors", detectors, "translation,affine,amp")->delimiter(',');

  std::string policy = "predecessor";
  EncodeOptions options;
  auto* enc = app.add_subcommand("encode", "Encode a CSV signal or PGM image into an FSG1 container");
  enc->add_option("input", input, "CSV or PGM file")->required();
  enc->add_option("-o,--output", output, "Container path")->required();
  enc->add_option("--policy", policy, "predecessor|detected");
  enc->add_option("--segment-len", options.segment_len, "Run length for the detected policy")->check(CLI::PositiveNumber);
  enc->add_option("--window", options.window, "How far back detected arrows may reach")->check(CLI::PositiveNumber);

  auto* dec = app.add_subcommand("decode", "Decode an FSG1 container to CSV (1-D) or PGM (2-D)");
  dec->add_option("input", input, "Container path")->required();
  dec->add_option("-o,--output", output, "Output path")->required();

  auto* demo = app.add_subcommand("demo-prototype", "Decompose [1,2,3,4,5] into unit segments");

  auto* stats = app.add_subcommand("stats", "Sparsity and entropy of an encoding");
  stats->add_option("raw", input, "Original CSV or PGM")->required();
  stats->add_option("encoded", second, "Container")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*verify) return run_verify(seed, instances);
    if (*analyze) return run_analyze(input, segment_len, tol, detectors);
    if (*enc) return run_encode(input, output, policy, options);
    if (*dec) return run_decode(input, output);
    if (*demo) return run_demo();
    if (*stats) return run_stats(input, second);
  } catch (const std::exception& e) {
    std::cerr << "fsig: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
