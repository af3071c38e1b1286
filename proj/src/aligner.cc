// Copyright 2026 The Aksara Authors.
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

#include "aksara/aligner.h"

#include <algorithm>
#include <cstdio>
#include <iterator>

#include "aksara/error.h"

namespace aksara {
namespace {

constexpr int kReportedSizes[] = {2, 3, 4, 5};

std::vector<Span> Segments(const std::vector<size_t>& positions,
                           const std::vector<Span>& units) {
  std::vector<Span> out;
  for (size_t i = 0; i < positions.size(); ++i) {
    const Span& unit = units[positions[i]];
    if (i > 0 && positions[i] == positions[i - 1] + 1) {
      out.back().end = unit.end;
    } else {
      out.push_back(unit);
    }
  }
  return out;
}

Span Enclosing(const std::vector<Span>& segments) {
  return {segments.front().begin, segments.back().end};
}

std::string HtmlEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string Highlight(const std::string& text, const std::vector<Span>& marks) {
  std::string out;
  size_t cursor = 0;
  for (const Span& m : marks) {
    out += HtmlEscape(std::string_view(text).substr(cursor, m.begin - cursor));
    out += "<mark>";
    out += HtmlEscape(std::string_view(text).substr(m.begin, m.size()));
    out += "</mark>";
    cursor = m.end;
  }
  out += HtmlEscape(std::string_view(text).substr(cursor));
  return out;
}

}  // namespace

std::set<std::string> SharedShingles(const ShingleSet& a, const ShingleSet& b) {
  CountOverlap(a, b);  // parameter check
  std::set<std::string> shared;
  std::set_intersection(a.keys.begin(), a.keys.end(), b.keys.begin(),
                        b.keys.end(), std::inserter(shared, shared.end()));
  return shared;
}

std::vector<Span> MergeSpans(std::vector<Span> spans) {
  std::sort(spans.begin(), spans.end());
  std::vector<Span> merged;
  for (const Span& s : spans) {
    if (!merged.empty() && s.begin <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, s.end);
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

std::vector<Span> UnitSpans(const TokenStream& normalized, ShingleUnit unit) {
  std::vector<Span> spans;
  if (unit == ShingleUnit::kAksara) {
    for (const Aksara& a : normalized.aksaras) spans.push_back(a.span);
  } else {
    for (const Grapheme& g : CharactersOf(normalized)) spans.push_back(g.span);
  }
  return spans;
}

ComparisonReport Compare(const CorpusIndex& index, const std::string& doc_a,
                         const std::string& doc_b, const ShingleParams& params,
                         const NormalizationProfile& profile) {
  params.Validate();
  index.Get(doc_a);
  index.Get(doc_b);

  ComparisonReport report;
  report.doc_a = doc_a;
  report.doc_b = doc_b;
  report.params = params.Canonical();
  report.profile = profile;

  const auto set_a = index.GetShingles(doc_a, params, profile);
  const auto set_b = index.GetShingles(doc_b, params, profile);
  const std::vector<Span> units_a =
      UnitSpans(index.Normalized(doc_a, profile), params.unit);
  const std::vector<Span> units_b =
      UnitSpans(index.Normalized(doc_b, profile), params.unit);

  report.overlap = CountOverlap(*set_a, *set_b);
  std::vector<Span> all_a;
  std::vector<Span> all_b;
  for (const std::string& key : SharedShingles(*set_a, *set_b)) {
    report.shared_keys.push_back(key);
    for (const auto& occ_a : set_a->occurrences.at(key)) {
      for (const auto& occ_b : set_b->occurrences.at(key)) {
        MatchSpan match;
        match.key = key;
        match.n = params.n;
        match.segments_a = Segments(occ_a, units_a);
        match.segments_b = Segments(occ_b, units_b);
        match.span_a = Enclosing(match.segments_a);
        match.span_b = Enclosing(match.segments_b);
        all_a.insert(all_a.end(), match.segments_a.begin(),
                     match.segments_a.end());
        all_b.insert(all_b.end(), match.segments_b.begin(),
                     match.segments_b.end());
        report.matches.push_back(std::move(match));
      }
    }
  }
  report.merged_a = MergeSpans(std::move(all_a));
  report.merged_b = MergeSpans(std::move(all_b));

  for (int n : kReportedSizes) {
    ShingleParams sized = params;
    sized.n = n;
    try {
      sized.Validate();
    } catch (const Error&) {
      continue;
    }
    report.counts_by_n[n] =
        CountOverlap(*index.GetShingles(doc_a, sized, profile),
                     *index.GetShingles(doc_b, sized, profile))
            .shared;
  }
  return report;
}

std::string ReportToText(const ComparisonReport& report) {
  auto fixed = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  auto range = [](const Span& s) {
    return std::to_string(s.begin) + "-" + std::to_string(s.end);
  };
  auto ranges = [&](const std::vector<Span>& list) {
    std::string out;
    for (const Span& s : list) {
      if (!out.empty()) out += ' ';
      out += range(s);
    }
    return out;
  };
  std::string out;
  out += "a\t" + report.doc_a + "\n";
  out += "b\t" + report.doc_b + "\n";
  out += "params\t" + BundleKey(report.params, report.profile) + "\n";
  out += "size_a\t" + std::to_string(report.overlap.size_a) + "\n";
  out += "size_b\t" + std::to_string(report.overlap.size_b) + "\n";
  out += "shared\t" + std::to_string(report.overlap.shared) + "\n";
  out += "jaccard\t" + fixed(report.overlap.Jaccard()) + "\n";
  out += "dice\t" + fixed(report.overlap.Dice()) + "\n";
  out += "counts";
  for (const auto& [n, count] : report.counts_by_n) {
    out += "\t" + std::to_string(n) + ":" + std::to_string(count);
  }
  out += "\n";
  out += "merged_a\t" + ranges(report.merged_a) + "\n";
  out += "merged_b\t" + ranges(report.merged_b) + "\n";
  for (const MatchSpan& m : report.matches) {
    out += "match\t" + m.key + "\t" + ranges(m.segments_a) + "\t" +
           ranges(m.segments_b) + "\n";
  }
  return out;
}

std::string ReportToHtml(const ComparisonReport& report,
                         const CorpusIndex& index) {
  const auto& a = index.Get(report.doc_a);
  const auto& b = index.Get(report.doc_b);
  auto title = [](const DocumentRecord& r) {
    return HtmlEscape(r.title.empty() ? r.id : r.id + " " + r.title);
  };
  char metrics[128];
  std::snprintf(metrics, sizeof(metrics), "Jaccard %.6f &middot; Dice %.6f",
                report.overlap.Jaccard(), report.overlap.Dice());

  std::string html =
      "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
      "<title>" + HtmlEscape(report.doc_a) + " / " + HtmlEscape(report.doc_b) +
      "</title>\n<style>\n"
      "body{font-family:serif;margin:2em}\n"
      "table{border-collapse:collapse;width:100%}\n"
      "td{vertical-align:top;width:50%;padding:0 1em;white-space:pre-wrap}\n"
      "th{text-align:left;padding:0 1em}\n"
      "mark{background:#ffe08a}\n"
      ".counts td{white-space:normal;width:auto}\n"
      "</style>\n</head>\n<body>\n";
  html += "<p>" + HtmlEscape(BundleKey(report.params, report.profile)) +
          "<br>" + metrics + "</p>\n";
  html += "<table class=\"counts\"><tr>";
  for (const auto& [n, count] : report.counts_by_n) {
    html += "<th>" + std::to_string(n) + "-aksaras</th>";
  }
  html += "</tr><tr>";
  for (const auto& [n, count] : report.counts_by_n) {
    html += "<td>" + std::to_string(count) + "</td>";
  }
  html += "</tr></table>\n";
  html += "<table>\n<tr><th>" + title(a.record) + "</th><th>" +
          title(b.record) + "</th></tr>\n";
  html += "<tr><td>" + Highlight(a.text, report.merged_a) + "</td><td>" +
          Highlight(b.text, report.merged_b) + "</td></tr>\n</table>\n";
  if (report.matches.empty()) {
    html += "<p>No matches at n=" + std::to_string(report.params.n) + ".</p>\n";
  }
  html += "</body>\n</html>\n";
  return html;
}

}  // namespace aksara
