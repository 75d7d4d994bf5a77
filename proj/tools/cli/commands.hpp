#pragma once

#include <stdexcept>

#include "cli.hpp"

namespace qgrass::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void cmd_encode(const Options& o, Report& r);
void cmd_verify_bijection(const Options& o, Report& r);
void cmd_verify_lemma(const Options& o, Report& r);
void cmd_verify_quasi(const Options& o, Report& r);
void cmd_grass(const Options& o, Report& r);
void cmd_extension_sample(const Options& o, Report& r);
void cmd_report(const Options& o, Report& r);
void cmd_hom(const Options& o, Report& r);
void cmd_ext(const Options& o, Report& r);
void cmd_filtcheck(const Options& o, Report& r);
void cmd_semicont(const Options& o, Report& r);

}  // namespace qgrass::cli
