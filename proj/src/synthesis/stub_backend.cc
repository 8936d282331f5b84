// Copyright 2026 The DocDjinn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "docdjinn/synthesis/stub_backend.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>

#include <fmt/format.h>

#include "docdjinn/common/error.h"
#include "docdjinn/synthesis/html.h"
#include "nlohmann/json.hpp"

namespace docdjinn::synthesis {

namespace {

constexpr std::array<const char*, 8> kCompanies = {
    "Northwind Traders", "Blue Harbor Supply", "Greenfield Paper Co",  "Atlas Office Goods",
    "Riverside Printing", "Summit Logistics",  "Oakwood Stationery",  "Pioneer Hardware"};
constexpr std::array<const char*, 8> kPeople = {
    "Maria Lopez", "James Carter", "Aiko Tanaka",  "Peter Novak",
    "Grace Mensah", "Omar Haddad", "Lena Fischer", "Tom Becker"};
constexpr std::array<const char*, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};
constexpr std::array<const char*, 6> kItems = {"Copy paper",  "Toner cartridge", "Stapler",
                                               "File folders", "Desk lamp",       "Envelopes"};
constexpr std::array<const char*, 6> kDrinks = {"Latte", "Espresso", "Green tea",
                                                "Bagel", "Croissant", "Orange juice"};
constexpr std::array<const char*, 5> kClsLabels = {"MEMO", "LETTER", "FORM", "EMAIL", "REPORT"};
constexpr std::array<const char*, 4> kStreets = {"12 Harbor Road", "48 Mill Lane", "7 Station Street",
                                                 "230 King Avenue"};

template <size_t N>
const char* Pick(const std::array<const char*, N>& a, long long i) {
  return a[static_cast<size_t>(((i % static_cast<long long>(N)) + N) % N)];
}

std::string DateText(long long g) {
  return fmt::format("{} {} 2024", 1 + g % 28, Pick(kMonths, g));
}

std::string Money(long long cents) { return fmt::format("{}.{:02d}", cents / 100, cents % 100); }

std::string Page(const std::string& title, const std::string& body, long long g) {
  std::string overflow;
  if (PlantedDefectFor(g) == PlantedDefect::kMultiPage) {
    overflow =
        "<div style=\"page-break-before:always\"><p>Continuation sheet attached.</p></div>";
  }
  return "<!DOCTYPE html><html><head><meta charset=\"utf-8\"><title>" + title +
         "</title><style>body{font-family:serif;margin:0}td{padding:2px 8px}</style></head>"
         "<body style=\"width:210mm;padding:10mm\">" +
         body + overflow + "</body></html>";
}

std::string GtScript(const nlohmann::ordered_json& payload) {
  return "<script type=\"application/json\" id=\"GT\">" + payload.dump() + "</script>";
}

std::string VqaDocument(long long g) {
  const std::string company = Pick(kCompanies, g);
  const std::string customer = Pick(kPeople, g * 3 + 1);
  const std::string signer = Pick(kPeople, g * 5 + 2);
  const std::string invoice = fmt::format("INV-{}", 1000 + g * 7);
  const std::string date = DateText(g);
  std::string rows;
  long long total = 0;
  for (int i = 0; i < 3; ++i) {
    const long long qty = 1 + (g + i) % 4;
    const long long unit = 250 + ((g * 31 + i * 17) % 40) * 25;
    total += qty * unit;
    rows += fmt::format("<tr><td>{}</td><td>{}</td><td>{}</td></tr>", Pick(kItems, g + i * 2),
                        qty, Money(qty * unit));
  }
  const std::string total_text = Money(total) + " EUR";
  nlohmann::ordered_json gt;
  gt["What is the invoice number?"] = invoice;
  gt["What is the total amount due?"] = total_text;
  gt["Who is the customer?"] = customer;
  gt["When was the invoice issued?"] = date;
  if (PlantedDefectFor(g) == PlantedDefect::kBadGt) {
    gt["What is the payment reference?"] = "Zephyr quartz lagoon";
  }
  const std::string body =
      "<div data-placeholder=\"logo\" data-content=\"" + company +
      " Logo\" style=\"width:40mm;height:15mm;\"></div>"
      "<h1>" + company + "</h1><h2>Invoice " + invoice + "</h2>"
      "<p>Date: " + date + "</p><p>Customer: " + customer + "</p>"
      "<table><tr><th>Item</th><th>Qty</th><th>Amount</th></tr>" + rows + "</table>"
      "<p>Total due: " + total_text + "</p>"
      "<p>Approved by: <span class=\"handwritten signature author1\" style=\"font-size:24px\">" +
      signer + "</span></p>"
      "<p>Note: <span class=\"handwritten author2\" style=\"font-size:24px\">paid in full</span></p>"
      "<div data-placeholder=\"barcode\" data-content=\"" + std::to_string(1000 + g * 7) +
      "\" style=\"width:50mm;height:12mm;\"></div>"
      "<div data-placeholder=\"stamp\" data-content=\"PAID " + date +
      "\" style=\"position:absolute;top:50mm;right:20mm;width:35mm;height:35mm;z-index:10;\"></div>" +
      GtScript(gt);
  return Page("Invoice " + invoice, body, g);
}

std::string ClsDocument(long long g) {
  const std::string kind = Pick(kClsLabels, g);
  const std::string from = Pick(kPeople, g);
  const std::string to = Pick(kPeople, g + 3);
  const std::string label =
      PlantedDefectFor(g) == PlantedDefect::kBadGt ? "SPREADSHEET" : kind;
  const std::string body =
      "<h1>" + kind + "</h1><p>To: " + to + "</p><p>From: " + from + "</p><p>Date: " +
      DateText(g) + "</p><p>Subject: quarterly supply review for " + Pick(kCompanies, g) +
      "</p><p>Please review the attached figures before the meeting and return your "
      "comments to the office.</p>"
      "<p><span class=\"handwritten signature author1\" style=\"font-size:24px\">" + from +
      "</span></p>" +
      GtScript({{"label", label}});
  return Page(kind, body, g);
}

std::string KieDocument(long long g) {
  const std::string company = Pick(kCompanies, g + 2);
  const std::string address = std::string(Pick(kStreets, g)) + " Springfield";
  const std::string date = fmt::format("{:02d}/{:02d}/2024", 1 + g % 28, 1 + g % 12);
  const long long total = 1200 + (g * 173) % 9000;
  nlohmann::ordered_json gt;
  gt["COMPANY"] = company;
  gt["DATE"] = date;
  gt["ADDRESS"] = address;
  gt["TOTAL"] = PlantedDefectFor(g) == PlantedDefect::kBadGt ? "pending audit review"
                                                             : Money(total);
  const std::string body =
      "<h1>" + company + "</h1><p>" + address + "</p><p>Date: " + date + "</p>"
      "<table><tr><td>" + Pick(kItems, g) + "</td><td>" + Money(total - 500) + "</td></tr>"
      "<tr><td>Service</td><td>5.00</td></tr></table>"
      "<p>TOTAL " + Money(total) + "</p><p>Thank you for your purchase</p>" +
      GtScript(gt);
  return Page("Receipt", body, g);
}

std::string FunsdDocument(long long g) {
  const std::string name = Pick(kPeople, g + 1);
  const std::string date = DateText(g + 5);
  const std::string dept = Pick(kCompanies, g + 4);
  std::string extra;
  if (PlantedDefectFor(g) == PlantedDefect::kBadGt) {
    extra = "<p><span class=\"PAIR_5 REMARK\">Reviewed</span></p>";
  }
  const std::string body =
      "<h1 class=\"PAIR_1 HEADER\">REGISTRATION FORM</h1>"
      "<p><span class=\"PAIR_2 QUESTION\">Name:</span> <span class=\"PAIR_2 ANSWER\">" + name +
      "</span></p>"
      "<p><span class=\"PAIR_3 QUESTION\">Date:</span> <span class=\"ANSWER PAIR_3\">" + date +
      "</span></p>"
      "<p><span class=\"PAIR_4 QUESTION\">Organisation:</span> <span class=\"PAIR_4 ANSWER\">" +
      dept + "</span></p>" + extra +
      "<p>Signature: <span class=\"handwritten signature author1\" style=\"font-size:24px\">" +
      name + "</span></p>";
  return Page("Form", body, g);
}

std::string CordDocument(long long g) {
  std::string rows;
  long long total = 0;
  for (int i = 1; i <= 3; ++i) {
    const long long cnt = 1 + (g + i) % 3;
    const long long price = cnt * (250 + ((g + i * 7) % 10) * 50);
    total += price;
    const bool bad = i == 3 && PlantedDefectFor(g) == PlantedDefect::kBadGt;
    rows += fmt::format(
        "<tr class=\"MENU_{0}\"><td class=\"MENU_{0} {1}\">{2}</td>"
        "<td class=\"MENU_{0} MENU_CNT\">{3}</td><td class=\"MENU_{0} MENU_PRICE\">{4}</td></tr>",
        i, bad ? "MENU_NAME" : "MENU_NM", Pick(kDrinks, g + i), cnt, Money(price));
  }
  const std::string body =
      "<h1>" + std::string(Pick(kCompanies, g + 5)) + " Cafe</h1><table>" + rows + "</table>"
      "<p>Total <span class=\"GENERIC TOTAL_TOTAL_PRICE\">" + Money(total) + "</span></p>"
      "<p>Cash <span class=\"GENERIC TOTAL_CASHPRICE\">" + Money(total + 500) + "</span></p>";
  return Page("Receipt", body, g);
}

std::string DlaDocument(long long g) {
  std::string extra;
  if (PlantedDefectFor(g) == PlantedDefect::kBadGt) {
    extra = "<p class=\"LE-TEXT\" style=\"position:absolute;left:-60px;top:40px\">Margin note</p>";
  }
  const std::string body =
      "<div class=\"LE-PAGE-HEADER\">" + std::string(Pick(kCompanies, g)) + " annual summary</div>"
      "<h1 class=\"LE-TITLE\">Operations report " + std::to_string(2010 + g % 14) + "</h1>"
      "<h2 class=\"LE-SECTION-HEADER\">1 Overview</h2>"
      "<p class=\"LE-TEXT\">This report summarises deliveries, staffing and costs for the "
      "period and compares them with the previous year.</p>"
      "<table class=\"LE-TABLE\"><tr><td>Region</td><td>Units</td></tr><tr><td>North</td><td>" +
      std::to_string(100 + g * 3) + "</td></tr><tr><td>South</td><td>" +
      std::to_string(80 + g * 5) + "</td></tr></table>"
      "<p class=\"LE-CAPTION\">Table 1: Units shipped by region.</p>"
      "<div data-placeholder=\"chart\" data-content=\"Bar chart of monthly units\" "
      "style=\"width:120mm;height:50mm;\"></div>" + extra +
      "<div class=\"LE-PAGE-FOOTER\">Page 1</div>";
  return Page("Report", body, g);
}

}  // namespace

PlantedDefect PlantedDefectFor(long long g) {
  if (g % 10 == 9) return PlantedDefect::kBadGt;
  if (g % 20 == 4) return PlantedDefect::kMultiPage;
  return PlantedDefect::kNone;
}

const std::vector<std::string>& StubBackend::Fixtures() {
  static const std::vector<std::string> kNames = {"vqa", "cls", "kie", "funsd", "cord", "dla"};
  return kNames;
}

StubBackend::StubBackend(std::string fixture) : fixture_(std::move(fixture)) {
  const auto& names = Fixtures();
  DOCDJINN_CHECK_ARG(std::find(names.begin(), names.end(), fixture_) != names.end(),
                     "unknown stub fixture: " + fixture_);
}

std::string StubBackend::Document(long long g) const {
  if (fixture_ == "vqa") return VqaDocument(g);
  if (fixture_ == "cls") return ClsDocument(g);
  if (fixture_ == "kie") return KieDocument(g);
  if (fixture_ == "funsd") return FunsdDocument(g);
  if (fixture_ == "cord") return CordDocument(g);
  return DlaDocument(g);
}

GenerationResponse StubBackend::Generate(const GenerationRequest& request) {
  int attempt = 0;
  {
    std::lock_guard<std::mutex> lock(mu_);
    attempt = attempts_[request.call_id]++;
  }
  if (fault_hook_) {
    if (auto err = fault_hook_(request, attempt)) throw *err;
  }
  const int m = SolutionsInPrompt(request.prompt);
  const long long call = std::max(0LL, CallNumber(request.call_id));
  GenerationResponse response;
  response.text = fmt::format("Here are {} documents.\n", m);
  for (int j = 0; j < m; ++j) {
    response.text += fmt::format("{}. <HTML>{}</HTML>\n", j + 1, Document(call * m + j));
  }
  TokenUsage usage;
  usage.input_tokens = static_cast<long long>((request.prompt.size() + 3) / 4) +
                       258LL * static_cast<long long>(request.images.size());
  usage.output_tokens = static_cast<long long>((response.text.size() + 3) / 4);
  response.usage = usage;
  return response;
}

long long CallNumber(std::string_view call_id) {
  long long value = -1;
  for (char c : call_id) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      value = (value < 0 ? 0 : value * 10) + (c - '0');
    }
  }
  return value;
}

int SolutionsInPrompt(std::string_view prompt) {
  static const std::regex kPattern(R"(Generate\s+(\d+)\s+distinct)");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_search(prompt.begin(), prompt.end(), m, kPattern)) {
    return std::max(1, std::stoi(m[1].str()));
  }
  return 1;
}

}  // namespace docdjinn::synthesis
