#include "qoc/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qoc/error.hpp"

namespace qoc {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  out << content;
}

GroupTable read_group_json(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw Error(ErrorCode::MalformedInput, path + ": missing order/table");
  int order = 0;
  std::vector<std::vector<int>> table;
  try {
    order = j.at("order").get<int>();
    table = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
  }
  if (int(table.size()) != order)
    throw Error(ErrorCode::MalformedInput, path + ": order does not match table");
  std::string name = j.value("name", std::string());
  return build_from_table(table, name);
}

void write_group_json(const std::string& path, const GroupTable& g) {
  json j;
  j["name"] = g.name;
  j["order"] = g.n;
  json rows = json::array();
  for (int i = 0; i < g.n; ++i) {
    json row = json::array();
    for (int k = 0; k < g.n; ++k) row.push_back(g.mul(i, k));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  write_text_file(path, j.dump(2) + "\n");
}

SignMatrix read_sgn(const std::string& path) {
  std::string text = read_text_file(path);
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty()) lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  const int n = int(lines.size());
  if (n == 0) throw Error(ErrorCode::MalformedInput, path + ": empty matrix");
  SignMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (int(lines[std::size_t(i)].size()) != n)
      throw Error(ErrorCode::MalformedInput, path + ": matrix is not square");
    for (int j = 0; j < n; ++j) {
      char c = lines[std::size_t(i)][std::size_t(j)];
      if (c == '+') m.put(i, j, 1);
      else if (c == '-') m.put(i, j, -1);
      else throw Error(ErrorCode::MalformedInput, path + ": bad character");
    }
  }
  return m;
}

void write_sgn(const std::string& path, const SignMatrix& m) {
  std::string out;
  for (const std::string& row : m.to_strings()) {
    out += row;
    out += '\n';
  }
  write_text_file(path, out);
}

IntMatrix read_inc(const std::string& path) {
  std::string text = read_text_file(path);
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty()) lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  const int rows = int(lines.size());
  if (rows == 0) throw Error(ErrorCode::MalformedInput, path + ": empty matrix");
  const int cols = int(lines[0].size());
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (int(lines[std::size_t(i)].size()) != cols)
      throw Error(ErrorCode::MalformedInput, path + ": ragged rows");
    for (int j = 0; j < cols; ++j) {
      char c = lines[std::size_t(i)][std::size_t(j)];
      if (c == '0') m.put(i, j, 0);
      else if (c == '1') m.put(i, j, 1);
      else throw Error(ErrorCode::MalformedInput, path + ": bad character");
    }
  }
  return m;
}

void write_inc(const std::string& path, const IntMatrix& m) {
  if (!m.is_zero_one())
    throw Error(ErrorCode::MalformedInput, "matrix is not 0/1");
  std::string out;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out += m.at(i, j) ? '1' : '0';
    out += '\n';
  }
  write_text_file(path, out);
}

}  // namespace qoc
