#include "hulthen/tables.hpp"

#include "hulthen/model.hpp"

#include <limits>

namespace hulthen {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

TableRowRef row(int n, int l, double ep, double em) { return {n, l, true, ep, em}; }
TableRowRef gap(int n, int l) { return {n, l, false, kNaN, kNaN}; }

TablePreset make_table1() {
  TablePreset t;
  t.name = "table1";
  t.blocks = {
      {1.0, 1.0, 1.0, 0.0,
       {row(1, 0, 1.000000, -0.600000), gap(1, 1)}},
      {2.0, 2.0, 1.0, 0.0,
       {row(1, 0, 0.707107, -0.707107), row(1, 1, 0.984171, -0.214941),
        gap(1, 2), row(2, 0, 0.984171, -0.214941), gap(2, 1)}},
      {3.0, 3.0, 1.0, 0.0,
       {row(1, 0, 0.302169, -0.763708), row(1, 1, 0.911438, -0.411438),
        row(1, 2, 0.600000, 0.600000), gap(1, 3),
        row(2, 0, 0.911438, -0.411438), row(2, 1, 0.600000, 0.600000),
        gap(2, 2), row(3, 0, 0.600000, 0.600000), gap(3, 1)}},
      {6.0, 6.0, 1.0, 0.0,
       {row(1, 0, -0.355051, -0.844949), row(1, 1, 0.235890, -0.635890),
        row(1, 2, 0.763708, -0.302169), row(1, 3, 0.994273, 0.284416),
        row(2, 0, 0.235890, -0.635890), row(2, 1, 0.763708, -0.302169),
        // (2,2) shares kappa with (1,3), (3,1) and (4,0) (identical n+l for
        // equal couplings with m1 = 0), so its pair equals theirs exactly
        row(2, 2, 0.994273, 0.284416), gap(2, 3),
        row(3, 0, 0.763708, -0.302169), row(3, 1, 0.994273, 0.284416),
        gap(3, 2), row(4, 0, 0.994273, 0.284416)}},
  };
  return t;
}

TablePreset make_table2() {
  TablePreset t;
  t.name = "table2";
  TableBlock b8{8.0, 8.0, 1.0, 0.0, {}};
  // n + l families: 1: (-0.539504, -0.872260)  2: (-0.063251, -0.703872)
  // 3: (0.447214, -0.447214)  4: (0.870312, -0.061324)  5: (0.800000, 0.800000)
  const double e8[5][2] = {{-0.539504, -0.872260},
                           {-0.063251, -0.703872},
                           {0.447214, -0.447214},
                           {0.870312, -0.061324},
                           {0.800000, 0.800000}};
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l + n <= 6; ++l) {
      const int fam = n + l;
      if (fam <= 5)
        b8.rows.push_back(row(n, l, e8[fam - 1][0], e8[fam - 1][1]));
      else
        b8.rows.push_back(gap(n, l));
    }
  }

  TableBlock b20{20.0, 20.0, 1.0, 0.0, {}};
  const double e20[8][2] = {{-0.846811, -0.935368}, {-0.662662, -0.853230},
                            {-0.418342, -0.735504}, {-0.127025, -0.578857},
                            {0.194284, -0.377770},  {0.523260, -0.122370},
                            {0.825665, 0.208818},   {0.998229, 0.706553}};
  // deeper well: every listed (n, l) is bound; the single printed gap row
  // is (9, 0)
  for (int n = 1; n <= 8; ++n)
    for (int l = 0; l + n <= 8; ++l)
      b20.rows.push_back(row(n, l, e20[n + l - 1][0], e20[n + l - 1][1]));
  b20.rows.push_back(gap(9, 0));

  t.blocks = {b8, b20};
  return t;
}

TablePreset make_table3() {
  TablePreset t;
  t.name = "table3";
  auto nine = [](const double (&e)[9][2]) {
    std::vector<TableRowRef> rows_;
    const int nl[9][2] = {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2},
                          {3, 0}, {3, 1}, {3, 2}, {3, 3}};
    for (int i = 0; i < 9; ++i)
      rows_.push_back(row(nl[i][0], nl[i][1], e[i][0], e[i][1]));
    return rows_;
  };

  const double ea[9][2] = {
      {0.822925, -4.913410}, {3.110670, -4.804170}, {3.065630, -4.807820},
      {4.252020, -4.650830}, {4.795730, -4.445800}, {4.229630, -4.655840},
      {4.793910, -4.447040}, {4.989330, -4.185200}, {4.956220, -3.857960}};
  const double eb[9][2] = {
      {4.913410, -0.822930}, {4.804170, -3.110670}, {4.807820, -3.065630},
      {4.650830, -4.252020}, {4.445800, -4.795730}, {4.655840, -4.229630},
      {4.447040, -4.793910}, {4.185200, -4.989330}, {3.857960, -4.956220}};
  const double ec[9][2] = {
      {4.857570, -1.483450}, {4.875450, -1.571890}, {4.999480, -2.709050},
      {4.999990, -2.772530}, {4.998750, -2.895220}, {4.924130, -3.601650},
      {4.914310, -3.648140}, {4.893220, -3.737900}, {4.858140, -3.864780}};
  const double ed[9][2] = {
      {4.871650, -3.222360}, {4.926240, -3.503700}, {5.000000, -4.245710},
      {4.995470, -4.392630}, {4.965180, -4.615030}, {4.915250, -4.768460},
      {4.878060, -4.836860}, {4.793250, -4.930300}, {4.647670, -4.993400}};

  TableBlock be{1.0, 1.0, 5.0, 0.1, {}};
  const double ee[19][2] = {
      {3.443410, -4.868720}, {4.722690, -4.742880}, {4.618770, -4.768190},
      {4.982510, -4.577550}, {4.964780, -4.347700}, {4.960360, -4.613290},
      {4.967570, -4.354450}, {4.788530, -4.056980}, {4.484330, -3.682040},
      {4.984480, -4.401670}, {4.794830, -4.065620}, {4.488330, -3.686650},
      {4.054980, -3.206920}, {3.455290, -2.575480}, {4.837690, -4.126180},
      {4.497830, -3.697630}, {4.060510, -3.212870}, {3.459590, -2.579950},
      {2.567010, -1.664550}};
  int k = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l <= n; ++l) {
      if (n == 5 && l == 5) {
        be.rows.push_back(gap(5, 5));
      } else {
        be.rows.push_back(row(n, l, ee[k][0], ee[k][1]));
        ++k;
      }
    }
  }

  t.blocks = {
      {2.0, 2.0, 5.0, 0.01, nine(ea)},
      {-2.0, 2.0, 5.0, 0.01, nine(eb)},
      {-2.0, 5.0, 5.0, 0.1, nine(ed)},
      {-10.0, 20.0, 5.0, 1.0, nine(ec)},
      be,
  };
  return t;
}

} // namespace

const TablePreset& table_preset(int which) {
  static const TablePreset t1 = make_table1();
  static const TablePreset t2 = make_table2();
  static const TablePreset t3 = make_table3();
  switch (which) {
    case 1:
      return t1;
    case 2:
      return t2;
    case 3:
      return t3;
    default:
      throw InvalidInput("table preset must be 1, 2 or 3");
  }
}

} // namespace hulthen
