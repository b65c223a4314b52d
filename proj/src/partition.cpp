#include "indcluster/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "indcluster/error.hpp"

namespace indcluster {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "parts must be positive and weakly decreasing");
  }
}

Partition Partition::rectangle(int rows, int width) {
  if (rows < 0 || width < 0) throw Error(ErrorCode::InvalidArgument, "negative rectangle side");
  if (rows == 0 || width == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), width));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::durfee() const {
  int d = 0;
  while (d < length() && part(d) > d) ++d;
  return d;
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(width()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

bool Partition::is_rectangle() const {
  return std::all_of(parts_.begin(), parts_.end(), [&](int p) { return p == width(); });
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::string Partition::label_name() const {
  std::string s = "d[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Error(ErrorCode::ParseError, "empty entry in '" + std::string(whole) + "'");
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  bool any = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    any = true;
    if (c == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && cur.empty())) {
      cur += c;
    } else {
      throw Error(ErrorCode::ParseError, "unexpected '" + std::string(1, c) + "' in '" + std::string(whole) + "'");
    }
  }
  if (any) flush();
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.size() < 2) throw Error(ErrorCode::ParseError, "bad partition '" + std::string(text) + "'");
  char open = t.front(), close = t.back();
  if (!((open == '(' && close == ')') || (open == '[' && close == ']')))
    throw Error(ErrorCode::ParseError, "partition must be bracketed: '" + std::string(text) + "'");
  std::string_view body = t.substr(1, t.size() - 2);
  auto bar = body.find('|');
  if (bar != std::string_view::npos) {
    Frobenius f{parse_int_list(body.substr(0, bar), text), parse_int_list(body.substr(bar + 1), text)};
    return frobenius_to_partition(f);
  }
  std::vector<int> parts = parse_int_list(body, text);
  try {
    return Partition(std::move(parts));
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "not a partition: '" + std::string(text) + "'");
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto ps = partitions_of(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int max_part) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = 1; p <= max_part; ++p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a > b;
  });
  return out;
}

int MayaSeq::at(int i) const {
  if (i >= 1 && i <= static_cast<int>(head.size())) return head[static_cast<std::size_t>(i - 1)];
  return charge - i;
}

MayaSeq partition_to_maya(const Partition& p, int charge) {
  MayaSeq a;
  a.charge = charge;
  for (int i = 1; i <= p.length(); ++i) a.head.push_back(p.part(i - 1) - i + charge);
  return a;
}

Partition maya_to_partition(const MayaSeq& a) {
  std::vector<int> parts;
  for (int i = 1; i <= static_cast<int>(a.head.size()); ++i) parts.push_back(a.at(i) + i - a.charge);
  return Partition(std::move(parts));
}

std::vector<int> maya_elements(const Partition& p, int floor) {
  std::vector<int> out;
  for (int i = 1;; ++i) {
    int v = p.part(i - 1) - i;
    if (v < floor) break;
    out.push_back(v);
  }
  return out;
}

Partition partition_from_maya_elements(const std::vector<int>& decreasing, int floor) {
  std::vector<int> parts;
  for (std::size_t k = 0; k < decreasing.size(); ++k) {
    if (k && decreasing[k] >= decreasing[k - 1])
      throw Error(ErrorCode::InvalidArgument, "Maya elements must be strictly decreasing");
    parts.push_back(decreasing[k] + static_cast<int>(k) + 1);
  }
  if (!decreasing.empty() && decreasing.back() < floor)
    throw Error(ErrorCode::InvalidArgument, "Maya element below floor");
  // A charge-0 set has exactly -floor elements at or above floor.
  if (static_cast<int>(decreasing.size()) != -floor)
    throw Error(ErrorCode::InvalidArgument, "Maya set does not have charge 0");
  return Partition(std::move(parts));
}

Frobenius partition_to_frobenius(const Partition& p) {
  Frobenius f;
  Partition c = p.conjugate();
  for (int i = 0; i < p.durfee(); ++i) {
    f.arms.push_back(p.part(i) - i - 1);
    f.legs.push_back(c.part(i) - i - 1);
  }
  return f;
}

Partition frobenius_to_partition(const Frobenius& f) {
  if (f.arms.size() != f.legs.size())
    throw Error(ErrorCode::InvalidArgument, "arms and legs must have equal length");
  auto check = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0 || (i && v[i] >= v[i - 1]))
        throw Error(ErrorCode::InvalidArgument, "Frobenius entries must be distinct, decreasing, nonnegative");
  };
  check(f.arms);
  check(f.legs);
  int d = static_cast<int>(f.arms.size());
  if (d == 0) return {};
  int rows = f.legs[0] + 1;
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  for (int i = 0; i < d; ++i) parts[static_cast<std::size_t>(i)] = f.arms[static_cast<std::size_t>(i)] + i + 1;
  // Column j < d has length legs[j] + j + 1; rows below the diagonal collect those columns.
  for (int i = d; i < rows; ++i) {
    int count = 0;
    for (int j = 0; j < d; ++j)
      if (f.legs[static_cast<std::size_t>(j)] + j + 1 > i) ++count;
    parts[static_cast<std::size_t>(i)] = count;
  }
  return Partition(std::move(parts));
}

std::string frobenius_to_string(const Frobenius& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.arms.size(); ++i) s += (i ? "," : "") + std::to_string(f.arms[i]);
  s += "|";
  for (std::size_t i = 0; i < f.legs.size(); ++i) s += (i ? "," : "") + std::to_string(f.legs[i]);
  return s + ")";
}

std::vector<int> finite_label(const Partition& p, int rows, int cols) {
  if (!p.fits(rows, cols))
    throw Error(ErrorCode::DoesNotFitBox, p.to_string() + " does not fit a " + std::to_string(rows) + "x" +
                                              std::to_string(cols) + " box");
  std::vector<int> out;
  for (int i = rows; i >= 1; --i) out.push_back(p.part(i - 1) - i);
  return out;
}

Partition partition_from_finite_label(std::vector<int> columns, int rows) {
  if (static_cast<int>(columns.size()) != rows)
    throw Error(ErrorCode::InvalidArgument, "label must have one column per row");
  std::sort(columns.begin(), columns.end(), std::greater<>());
  for (std::size_t k = 1; k < columns.size(); ++k)
    if (columns[k] == columns[k - 1]) throw Error(ErrorCode::InvalidArgument, "repeated column index");
  if (!columns.empty() && columns.back() < -rows)
    throw Error(ErrorCode::InvalidArgument, "column index below -m");
  std::vector<int> parts;
  for (int i = 1; i <= rows; ++i) parts.push_back(columns[static_cast<std::size_t>(i - 1)] + i);
  return Partition(std::move(parts));
}

}  // namespace indcluster
