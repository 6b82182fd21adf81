/* Copyright 2026 The Blindspot Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <fstream>
#include <iomanip>

#include <nlohmann/json.hpp>

#include "blindspot/eval.hpp"

namespace blindspot {

void write_report_text(std::ostream& out, const MetricReport& report) {
  out << std::setprecision(6) << std::fixed;
  out << "frames=" << report.frames << "\n";
  out << "tp=" << report.tp << "\n";
  out << "fp=" << report.fp << "\n";
  out << "fn=" << report.fn << "\n";
  out << "tn=" << report.tn << "\n";
  out << "iou=" << report.iou << "\n";
  out << "recall=" << report.recall << "\n";
  if (report.precision_applicable) {
    out << "precision=" << report.precision << "\n";
  } else {
    out << "precision=n/a\n";
  }
  out << "fn_rate=" << report.fn_rate << "\n";
}

void write_report_json(const std::filesystem::path& path, const MetricReport& report) {
  nlohmann::json j;
  j["frames"] = report.frames;
  j["tp"] = report.tp;
  j["fp"] = report.fp;
  j["fn"] = report.fn;
  j["tn"] = report.tn;
  j["iou"] = report.iou;
  j["recall"] = report.recall;
  j["precision_applicable"] = report.precision_applicable;
  if (report.precision_applicable) {
    j["precision"] = report.precision;
  } else {
    j["precision"] = nullptr;
  }
  j["fn_rate"] = report.fn_rate;

  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::kIoFailure, "cannot write report to " + path.string());
  }
  out << j.dump(2) << "\n";
}

}  // namespace blindspot
