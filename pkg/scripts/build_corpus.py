"""Write the bundled corpus and label it with the oracle.

    python3 scripts/build_corpus.py            # rewrite programs, rows and labels
    python3 scripts/build_corpus.py --label    # only recompute .expect files

Labels come from running each program in the oracle; nothing here states
whether a program is buggy.
"""

import argparse
import sys
import textwrap
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"

SCHEMA = """\
-- schema shared by every corpus program
CREATE TABLE employee (
  id INTEGER PRIMARY KEY,
  name VARCHAR(100) NOT NULL,
  salary INTEGER,
  dept CHAR(4),
  hired DATE,
  bonus DECIMAL(10, 2),
  active BOOLEAN
);

CREATE TABLE warehouse (
  w_id INTEGER PRIMARY KEY,
  label VARCHAR(40),
  qty INTEGER,
  price DECIMAL(8, 2),
  stocked TIMESTAMP
);

CREATE TABLE stock (
  s_i_id INTEGER,
  s_w_id INTEGER,
  s_quantity SMALLINT,
  s_dist_01 CHAR(24),
  s_dist_02 CHAR(24),
  s_ytd BIGINT
);

CREATE TABLE invoice (
  inv_id BIGINT PRIMARY KEY,
  total DOUBLE,
  tax REAL,
  paid BOOLEAN,
  issued DATE,
  due TIME
);

CREATE TABLE genre (
  g_id INTEGER,
  g_name VARCHAR(30),
  g_rank SMALLINT
);
"""

ROWS = """\
employee: 1, 'ann', 50000, 'RND', '2020-01-02', 10.50, TRUE
employee: 2, 'bob', 30000, 'OPS', '2019-05-06', NULL, FALSE
warehouse: 1, 'bolts', 100, 0.25, '2021-01-01 10:00:00'
warehouse: 2, 'nuts', 7, 0.10, '2021-02-01 09:30:00'
stock: 7, 1, 12, 'north', 'south', 900
invoice: 10, 99.5, 7.25, TRUE, '2022-02-02', '10:00:00'
genre: 1, 'jazz', 2
genre: 2, 'folk', 5
"""

# name -> (parameters after the connection, body, extra members)
PROGRAMS = {}


def program(name, body, params="", extra=""):
    PROGRAMS[name] = (params, textwrap.dedent(body).strip("\n"), textwrap.dedent(extra).strip("\n"))


# --- parameter indices -------------------------------------------------------

program("SetIndexTooHigh", """
    PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ?");
    ps.setInt(1, 7);
    ps.setInt(2, 7);
    ResultSet rs = ps.executeQuery();
""")

program("SetIndexZero", """
    PreparedStatement ps = conn.prepareStatement("SELECT id FROM employee WHERE name = ?");
    ps.setString(0, "ann");
    ResultSet rs = ps.executeQuery();
""")

program("SetIndexConcat", """
    String sql = "INSERT INTO genre (g_id, g_name) " + "VALUES (?, ?)";
    PreparedStatement ps = conn.prepareStatement(sql);
    ps.setInt(1, 3);
    ps.setString(2, "blues");
    ps.setString(3, "extra");
    ps.executeUpdate();
""")

program("SetIndexCounterOverrun", """
    PreparedStatement ps = conn.prepareStatement("UPDATE employee SET salary = ? WHERE id = ?");
    int ctr = 1;
    ps.setInt(ctr++, 42000);
    ps.setInt(ctr++, 1);
    ps.setInt(ctr++, 2);
    ps.executeUpdate();
""")

program("SetIndexAfterReassign", """
    PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ? AND dept = ?");
    ps.setInt(1, 1);
    ps.setString(2, "RND");
    ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ?");
    ps.setInt(1, 1);
    ps.setString(2, "RND");
""")

program("SetIndexBranchJoin", """
    String sql = "SELECT name FROM employee WHERE id = ?";
    if (flag) {
        sql = "SELECT dept FROM employee WHERE id = ?";
    }
    PreparedStatement ps = conn.prepareStatement(sql);
    ps.setInt(2, 3);
""", params=", boolean flag")

program("SetIndexInLoop", """
    PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse WHERE qty > ?");
    int n = 0;
    while (n < 3) {
        ps.setInt(1, n);
        ps.setInt(2, n);
        n++;
    }
""")

# --- column indices and labels --------------------------------------------------

program("GetIndexTooHigh", """
    PreparedStatement ps = conn.prepareStatement("SELECT name, salary FROM employee");
    ResultSet rs = ps.executeQuery();
    rs.next();
    int x = rs.getInt(3);
""")

program("GetIndexZero", """
    PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE salary > ?");
    ps.setInt(1, 100);
    ResultSet rs = ps.executeQuery();
    rs.next();
    String s = rs.getString(0);
""")

program("GetLabelTypo", """
    PreparedStatement ps = conn.prepareStatement("SELECT name, dept FROM employee");
    ResultSet rs = ps.executeQuery();
    while (rs.next()) {
        String n = rs.getString("nam");
    }
""")

program("GetLabelHiddenByAlias", """
    PreparedStatement ps = conn.prepareStatement("SELECT name AS full_name FROM employee");
    ResultSet rs = ps.executeQuery();
    rs.next();
    String n = rs.getString("name");
""")

program("GetLabelFromVariable", """
    String col = "wage";
    PreparedStatement ps = conn.prepareStatement("SELECT salary FROM employee");
    ResultSet rs = ps.executeQuery();
    rs.next();
    int w = rs.getInt(col);
""")

program("GetLabelOtherTable", """
    PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse");
    ResultSet rs = ps.executeQuery();
    rs.next();
    String n = rs.getString("name");
""")

program("GetStarIndexTooHigh", """
    PreparedStatement ps = conn.prepareStatement("SELECT * FROM genre");
    ResultSet rs = ps.executeQuery();
    rs.next();
    int x = rs.getInt(4);
""")

program("GetLabelInLoop", """
    PreparedStatement ps = conn.prepareStatement("SELECT label, qty FROM warehouse");
    ResultSet rs = ps.executeQuery();
    while (rs.next()) {
        String l = rs.getString("label");
        int q = rs.getInt("quantity");
    }
""")

program("GetLabelLostAtJoin", """
    String sql = "SELECT name, salary FROM employee";
    if (flag) {
        sql = "SELECT name, dept FROM employee";
    }
    PreparedStatement ps = conn.prepareStatement(sql);
    ResultSet rs = ps.executeQuery();
    rs.next();
    String n = rs.getString("name");
    int s = rs.getInt("salary");
""", params=", boolean flag")

program("GetIndexPlainStatement", """
    Statement st = conn.createStatement();
    ResultSet rs = st.executeQuery("SELECT qty FROM warehouse");
    rs.next();
    String q = rs.getString(2);
""")

program("GetLabelAfterExecute", """
    Statement st = conn.createStatement();
    st.execute("SELECT total FROM invoice");
    ResultSet rs = st.getResultSet();
    rs.next();
    double t = rs.getDouble("tax");
""")

# --- getter conversions ---------------------------------------------------------

program("GetIntFromVarchar", """
    String sql = "SELECT name FROM ";
    sql += "employee WHERE salary < ?";
    PreparedStatement ps = conn.prepareStatement(sql);
    ps.setInt(1, 40000);
    ResultSet rs = ps.executeQuery();
    rs.next();
    int name = rs.getInt("name");
""")

program("GetStringFromInteger", """
    PreparedStatement ps = conn.prepareStatement("SELECT salary FROM employee WHERE id = ?");
    ps.setInt(1, 2);
    ResultSet rs = ps.executeQuery();
    rs.next();
    String s = rs.getString("salary");
""")

program("GetIntFromDecimal", """
    PreparedStatement ps = conn.prepareStatement("SELECT bonus FROM employee");
    ResultSet rs = ps.executeQuery();
    while (rs.next()) {
        int b = rs.getInt("bonus");
    }
""")

program("GetDateFromTimestamp", """
    PreparedStatement ps = conn.prepareStatement("SELECT stocked FROM warehouse WHERE w_id = ?");
    ps.setInt(1, 1);
    ResultSet rs = ps.executeQuery();
    rs.next();
    Date d = rs.getDate("stocked");
""")

program("GetLongFromSmallint", """
    PreparedStatement ps = conn.prepareStatement("SELECT s_quantity FROM stock WHERE s_w_id = ?");
    ps.setInt(1, 1);
    ResultSet rs = ps.executeQuery();
    rs.next();
    long q = rs.getLong(1);
""")

program("GetBooleanFromChar", """
    Statement st = conn.createStatement();
    ResultSet rs = st.executeQuery("SELECT dept FROM employee");
    rs.next();
    boolean b = rs.getBoolean("dept");
""")

program("GetDoubleFromReal", """
    PreparedStatement ps = conn.prepareStatement("SELECT tax FROM invoice WHERE inv_id = ?");
    ps.setLong(1, 10L);
    ResultSet rs = ps.executeQuery();
    rs.next();
    double t = rs.getDouble("tax");
""")

program("GetCounterWrongType", """
    PreparedStatement ps = conn.prepareStatement("SELECT name, dept, hired FROM employee");
    ResultSet rs = ps.executeQuery();
    rs.next();
    int c = 1;
    String n = rs.getString(c++);
    String d = rs.getString(c++);
    int h = rs.getInt(c++);
""")

program("GetConcatColumns", """
    String cols = "g_id, g_name";
    String sql = "SELECT " + cols + " FROM genre";
    PreparedStatement ps = conn.prepareStatement(sql);
    ResultSet rs = ps.executeQuery();
    rs.next();
    int id = rs.getInt(1);
    int nm = rs.getInt(2);
""")

program("GetAfterResultReassign", """
    PreparedStatement a = conn.prepareStatement("SELECT qty FROM warehouse");
    PreparedStatement b = conn.prepareStatement("SELECT label FROM warehouse");
    ResultSet rs = a.executeQuery();
    rs.next();
    int q = rs.getInt(1);
    rs = b.executeQuery();
    rs.next();
    int l = rs.getInt(1);
""")

program("GetShortFromInteger", """
    PreparedStatement ps = conn.prepareStatement("SELECT g_id FROM genre");
    ResultSet rs = ps.executeQuery();
    rs.next();
    short g = rs.getShort("g_id");
""")

program("GetStringFromIntegerIndex", """
    PreparedStatement ps = conn.prepareStatement("SELECT id, name FROM employee WHERE dept = ?");
    ps.setString(1, "OPS");
    ResultSet rs = ps.executeQuery();
    rs.next();
    String id = rs.getString(1);
""")

program("GetInHelper", """
    PreparedStatement ps = conn.prepareStatement("SELECT name, salary FROM employee");
    ResultSet rs = ps.executeQuery();
    rs.next();
    show(rs);
""", extra="""
    void show(@Sql(out = {"VARCHAR name", "INTEGER salary"}) ResultSet rs) throws SQLException {
        String n = rs.getString("name");
        String s = rs.getString("salary");
    }
""")

# --- setter conversions ---------------------------------------------------------

program("SetStringIntoInteger", """
    PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse WHERE qty > ?");
    ps.setString(1, "5");
    ResultSet rs = ps.executeQuery();
""")

program("SetIntIntoVarchar", """
    PreparedStatement ps = conn.prepareStatement("SELECT id FROM employee WHERE name = ?");
    ps.setInt(1, 12);
""")

program("SetLongIntoInteger", """
    PreparedStatement ps = conn.prepareStatement("DELETE FROM employee WHERE id = ?");
    ps.setLong(1, 2L);
    ps.executeUpdate();
""")

program("SetIntIntoBigint", """
    PreparedStatement ps = conn.prepareStatement("SELECT total FROM invoice WHERE inv_id = ?");
    ps.setInt(1, 10);
""")

program("SetStringIntoDate", """
    PreparedStatement ps = conn.prepareStatement("UPDATE invoice SET issued = ? WHERE inv_id = ?");
    ps.setString(1, "2023-01-01");
    ps.setLong(2, 10L);
""")

program("SetDoubleIntoDecimal", """
    PreparedStatement ps = conn.prepareStatement("UPDATE employee SET bonus = ? WHERE id = ?");
    ps.setDouble(1, 1.5);
    ps.setInt(2, 1);
""")

program("SetBooleanIntoVarchar", """
    PreparedStatement ps = conn.prepareStatement("INSERT INTO genre VALUES (?, ?, ?)");
    ps.setInt(1, 9);
    ps.setBoolean(2, booked);
    ps.setShort(3, rank);
""", params=", boolean booked, short rank")

program("SetIntIntoSmallint", """
    PreparedStatement ps = conn.prepareStatement("UPDATE stock SET s_quantity = ? WHERE s_i_id = ?");
    ps.setInt(1, 5);
    ps.setInt(2, 7);
""")

program("SetCounterIntoSmallint", """
    PreparedStatement ps = conn.prepareStatement("INSERT INTO genre (g_id, g_name, g_rank) VALUES (?, ?, ?)");
    int i = 1;
    ps.setInt(i++, 4);
    ps.setString(i++, "punk");
    ps.setInt(i++, 1);
""")

program("SetWrongTypeAfterJoin", """
    String sql = "SELECT name FROM employee WHERE salary BETWEEN ? AND ?";
    if (flag) {
        sql = "SELECT dept FROM employee WHERE salary BETWEEN ? AND ?";
    } else {
        sql = "SELECT hired FROM employee WHERE salary BETWEEN ? AND ?";
    }
    PreparedStatement ps = conn.prepareStatement(sql);
    ps.setInt(1, 10);
    ps.setString(2, "90000");
""", params=", boolean flag")

program("SetLongIntoInList", """
    PreparedStatement ps = conn.prepareStatement("DELETE FROM employee WHERE id IN (?, ?)");
    ps.setInt(1, 1);
    ps.setLong(2, 2L);
""")

program("SetWrongTypeInLoop", """
    PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ?");
    int k = 0;
    while (k < 2) {
        ps.setString(1, "k" + k);
        ResultSet rs = ps.executeQuery();
        k = k + 1;
    }
""")

program("SetIntIntoChar", """
    PreparedStatement ps = conn.prepareStatement("SELECT id FROM employee WHERE dept = ?");
    ps.setInt(1, 3);
""")

# --- programs without misuse ------------------------------------------------------

program("SalaryQuery", """
    String sql = "SELECT name FROM ";
    sql += "employee WHERE salary < ?";
    PreparedStatement ps = conn.prepareStatement(sql);
    ps.setInt(1, 40000);
    ResultSet rs = ps.executeQuery();
    rs.next();
    String name = rs.getString("name");
""")

program("IndexAccess", """
    PreparedStatement ps = conn.prepareStatement("SELECT id, name FROM employee WHERE salary > ?");
    ps.setInt(1, 1000);
    ResultSet rs = ps.executeQuery();
    while (rs.next()) {
        int id = rs.getInt(1);
        String n = rs.getString(2);
    }
""")

program("LongFromInteger", """
    PreparedStatement ps = conn.prepareStatement("SELECT salary FROM employee");
    ResultSet rs = ps.executeQuery();
    rs.next();
    long s = rs.getLong("salary");
""")

program("CounterBinding", """
    PreparedStatement ps = conn.prepareStatement("UPDATE warehouse SET qty = ? WHERE label = ?");
    int ctr = 1;
    ps.setInt(ctr++, 55);
    ps.setString(ctr++, "bolts");
    ps.executeUpdate();
""")

program("ReassignPrepared", """
    String sql = "SELECT w_id FROM warehouse " + "WHERE label IS NOT NULL AND price IS NULL";
    PreparedStatement pst = conn.prepareStatement(sql);
    sql = "SELECT label FROM warehouse " + "WHERE w_id = ?";
    pst = conn.prepareStatement(sql);
    pst.setInt(1, 2);
    ResultSet rs = pst.executeQuery();
    rs.next();
    String l = rs.getString(1);
""")

program("BranchSameSignature", """
    String sql = "SELECT name FROM employee WHERE id = ?";
    if (flag) {
        sql = "SELECT name FROM employee WHERE salary = ?";
    }
    PreparedStatement ps = conn.prepareStatement(sql);
    ps.setInt(1, 1);
    ResultSet rs = ps.executeQuery();
    rs.next();
    String n = rs.getString("name");
""", params=", boolean flag")

program("LoopGetters", """
    PreparedStatement ps = conn.prepareStatement("SELECT label, qty, price FROM warehouse");
    ResultSet rs = ps.executeQuery();
    int total = 0;
    while (rs.next()) {
        String l = rs.getString("label");
        total += rs.getInt("qty");
        BigDecimal p = rs.getBigDecimal("price");
    }
""")

program("PlainStatementQuery", """
    Statement stmt = conn.createStatement();
    String sql = "SELECT label FROM warehouse";
    ResultSet rs = stmt.executeQuery(sql);
    while (rs.next()) {
        String label = rs.getString(1);
    }
""")

program("ExecuteThenFetch", """
    Statement stmt = conn.createStatement();
    stmt.execute("SELECT total FROM invoice");
    ResultSet rs = stmt.getResultSet();
    rs.next();
    double t = rs.getDouble("total");
""")

program("InsertAllTypes", """
    PreparedStatement ps = conn.prepareStatement("INSERT INTO employee VALUES (?, ?, ?, ?, ?, ?, ?)");
    ps.setInt(1, 3);
    ps.setString(2, "cid");
    ps.setInt(3, 41000);
    ps.setString(4, "OPS");
    ps.setDate(5, Date.valueOf("2020-03-04"));
    ps.setBigDecimal(6, new BigDecimal("2.50"));
    ps.setBoolean(7, true);
    ps.executeUpdate();
""")

program("InsertInvoice", """
    Date issued = Date.valueOf("2024-03-01");
    Time due = Time.valueOf("12:00:00");
    PreparedStatement ps = conn.prepareStatement("INSERT INTO invoice VALUES (?, ?, ?, ?, ?, ?)");
    ps.setLong(1, 11L);
    ps.setDouble(2, 12.5);
    ps.setFloat(3, 1.25f);
    ps.setBoolean(4, false);
    ps.setDate(5, issued);
    ps.setTime(6, due);
    ps.execute();
""")

program("TimestampAndDecimal", """
    PreparedStatement ps = conn.prepareStatement("SELECT stocked, price FROM warehouse WHERE w_id = ?");
    ps.setInt(1, 2);
    ResultSet rs = ps.executeQuery();
    if (rs.next()) {
        Timestamp s = rs.getTimestamp(1);
        BigDecimal p = rs.getBigDecimal(2);
    }
""")

program("StockLoopBranch", """
    PreparedStatement statement = null;
    ResultSet rs = null;
    String dist = "";
    int d = Integer.parseInt(did);
    int n = 0;
    while (n < count) {
        statement = conn.prepareStatement(
            "select * from stock " +
            "where s_i_id = ? and s_w_id = ?");
        statement.setInt(1, n);
        statement.setInt(2, 1);
        rs = statement.executeQuery();
        rs.next();
        if (d == 1) {
            dist = rs.getString("s_dist_01");
        } else if (d == 2) {
            dist = rs.getString("s_dist_02");
        }
        n++;
    }
""", params=", String did, int count")

program("StockTypes", """
    PreparedStatement ps = conn.prepareStatement("SELECT s_quantity, s_ytd, s_dist_01 FROM stock");
    ResultSet rs = ps.executeQuery();
    while (rs.next()) {
        short q = rs.getShort(1);
        long y = rs.getLong("s_ytd");
        String d = rs.getString("S_DIST_01");
    }
""")

program("DeleteInList", """
    PreparedStatement ps = conn.prepareStatement("DELETE FROM genre WHERE g_id IN (?, ?)");
    ps.setInt(1, 1);
    ps.setInt(2, 2);
    int n = ps.executeUpdate();
""")

program("BetweenBounds", """
    PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE salary BETWEEN ? AND ?");
    ps.setInt(1, 10000);
    ps.setInt(2, 60000);
    ResultSet rs = ps.executeQuery();
    while (rs.next()) {
        String n = rs.getString(1);
    }
""")

program("LabelEquals", """
    PreparedStatement ps = conn.prepareStatement("SELECT w_id, label FROM warehouse WHERE label = ?");
    ps.setString(1, "bolts");
    ResultSet rs = ps.executeQuery();
    rs.next();
    int id = rs.getInt("w_id");
""")

program("OrderedLabels", """
    PreparedStatement ps = conn.prepareStatement("SELECT g_name, g_rank FROM genre ORDER BY g_rank DESC");
    ResultSet rs = ps.executeQuery();
    while (rs.next()) {
        String g = rs.getString("g_name");
        short r = rs.getShort("g_rank");
    }
""")

program("AliasLabel", """
    PreparedStatement ps = conn.prepareStatement("SELECT e.name AS full_name FROM employee e WHERE e.id = ?");
    ps.setInt(1, 1);
    ResultSet rs = ps.executeQuery();
    rs.next();
    String n = rs.getString("full_name");
""")

program("CaseInsensitiveLabel", """
    PreparedStatement ps = conn.prepareStatement("SELECT name, dept FROM employee");
    ResultSet rs = ps.executeQuery();
    rs.next();
    String n = rs.getString("NAME");
    String d = rs.getString("Dept");
""")

program("StarAllColumns", """
    PreparedStatement ps = conn.prepareStatement("SELECT * FROM employee WHERE id = ?");
    ps.setInt(1, 1);
    ResultSet rs = ps.executeQuery();
    rs.next();
    int id = rs.getInt(1);
    String n = rs.getString(2);
    int s = rs.getInt(3);
    String d = rs.getString(4);
    Date h = rs.getDate(5);
    BigDecimal b = rs.getBigDecimal(6);
    boolean a = rs.getBoolean(7);
""")

program("LabelFromVariable", """
    String col = "qty";
    PreparedStatement ps = conn.prepareStatement("SELECT qty FROM warehouse");
    ResultSet rs = ps.executeQuery();
    rs.next();
    int q = rs.getInt(col);
""")

program("ConcatColumns", """
    String cols = "g_id, g_name";
    String sql = "SELECT " + cols + " FROM genre";
    PreparedStatement ps = conn.prepareStatement(sql);
    ResultSet rs = ps.executeQuery();
    rs.next();
    int id = rs.getInt(1);
    String nm = rs.getString(2);
""")

program("HelperWithAnnotation", """
    PreparedStatement ps = conn.prepareStatement("SELECT name, salary, dept FROM employee");
    ResultSet rs = ps.executeQuery();
    while (rs.next()) {
        show(rs);
    }
""", extra="""
    void show(@Sql(out = {"VARCHAR name", "INTEGER salary"}) ResultSet rs) throws SQLException {
        String n = rs.getString("name");
        int s = rs.getInt(2);
    }
""")

program("AnnotatedReturn", """
    ResultSet rs = fetch(conn);
    rs.next();
    String g = rs.getString(1);
""", extra="""
    @Sql(out = {"VARCHAR g_name"})
    ResultSet fetch(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT g_name, g_id FROM genre");
        return ps.executeQuery();
    }
""")

program("StatementUpdate", """
    Statement st = conn.createStatement();
    int n = st.executeUpdate("DELETE FROM genre WHERE g_id = 3");
""")

program("PreparedUpdate", """
    PreparedStatement ps = conn.prepareStatement("UPDATE employee SET dept = ?, salary = ? WHERE id = ?");
    ps.setString(1, "OPS");
    ps.setInt(2, 31000);
    ps.setInt(3, 2);
    ps.executeUpdate();
""")

program("NestedBranchInLoop", """
    PreparedStatement ps = conn.prepareStatement("SELECT name, salary, active FROM employee");
    ResultSet rs = ps.executeQuery();
    int rich = 0;
    while (rs.next()) {
        if (rs.getBoolean("active")) {
            if (rs.getInt("salary") > 40000) {
                rich++;
            } else {
                String n = rs.getString(1);
            }
        }
    }
""")

program("OutPrefixJoin", """
    String sql = "SELECT name, salary FROM employee";
    if (flag) {
        sql = "SELECT name, salary, dept FROM employee";
    }
    PreparedStatement ps = conn.prepareStatement(sql);
    ResultSet rs = ps.executeQuery();
    rs.next();
    String n = rs.getString("name");
    int s = rs.getInt(2);
""", params=", boolean flag")

program("ResultReassign", """
    PreparedStatement a = conn.prepareStatement("SELECT qty FROM warehouse");
    PreparedStatement b = conn.prepareStatement("SELECT label FROM warehouse");
    ResultSet rs = a.executeQuery();
    rs.next();
    int q = rs.getInt(1);
    rs = b.executeQuery();
    rs.next();
    String l = rs.getString(1);
""")

program("InterleavedStatements", """
    PreparedStatement find = conn.prepareStatement("SELECT id FROM employee WHERE name = ?");
    PreparedStatement raise = conn.prepareStatement("UPDATE employee SET salary = ? WHERE id = ?");
    find.setString(1, "ann");
    ResultSet rs = find.executeQuery();
    while (rs.next()) {
        raise.setInt(1, 60000);
        raise.setInt(2, rs.getInt(1));
        raise.executeUpdate();
    }
""")

program("IndexVariable", """
    int col = 2;
    PreparedStatement ps = conn.prepareStatement("SELECT label, qty FROM warehouse");
    ResultSet rs = ps.executeQuery();
    rs.next();
    int q = rs.getInt(col);
""")

program("IndexArithmetic", """
    int base = 1;
    PreparedStatement ps = conn.prepareStatement("SELECT id FROM employee WHERE salary > ? AND dept = ?");
    ps.setInt(base, 100);
    ps.setString(base + 1, "RND");
""")

program("DateAndTime", """
    PreparedStatement ps = conn.prepareStatement("SELECT issued, due FROM invoice");
    ResultSet rs = ps.executeQuery();
    rs.next();
    Date i = rs.getDate("issued");
    Time d = rs.getTime("due");
""")

program("FloatingColumns", """
    PreparedStatement ps = conn.prepareStatement("SELECT total, tax, paid FROM invoice WHERE inv_id = ?");
    ps.setLong(1, 10L);
    ResultSet rs = ps.executeQuery();
    rs.next();
    double t = rs.getDouble(1);
    float x = rs.getFloat(2);
    boolean p = rs.getBoolean(3);
""")

program("RepeatedQueryInLoop", """
    PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse WHERE w_id = ?");
    int k = 1;
    while (k < 3) {
        ps.setInt(1, k);
        ResultSet rs = ps.executeQuery();
        if (rs.next()) {
            String l = rs.getString("label");
        }
        k++;
    }
""")

program("OptionalReassign", """
    String sql = "SELECT g_name FROM genre WHERE g_rank = ?";
    if (top) {
        sql = "SELECT g_name FROM genre WHERE g_rank < ?";
    }
    PreparedStatement ps = conn.prepareStatement(sql);
    ps.setShort(1, rank);
    ResultSet rs = ps.executeQuery();
""", params=", boolean top, short rank")

program("ShortUpdate", """
    PreparedStatement ps = conn.prepareStatement("UPDATE stock SET s_quantity = ? WHERE s_i_id = ?");
    ps.setShort(1, qty);
    ps.setInt(2, 7);
    ps.executeUpdate();
""", params=", short qty")

program("TwoMethods", """
    PreparedStatement ps = conn.prepareStatement("SELECT g_id FROM genre");
    ResultSet rs = ps.executeQuery();
    rs.next();
    int g = rs.getInt("g_id");
""", extra="""
    public void other(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT g_name FROM genre WHERE g_id = ?");
        ps.setInt(1, 1);
        ResultSet rs = ps.executeQuery();
        rs.next();
        String g = rs.getString("g_name");
    }
""")

program("LiteralFilter", """
    PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse WHERE qty > 10 AND label <> 'x'");
    ResultSet rs = ps.executeQuery();
    while (rs.next()) {
        String l = rs.getString("label");
    }
""")

program("DecimalByIndex", """
    PreparedStatement ps = conn.prepareStatement("SELECT bonus FROM employee WHERE id = ?");
    ps.setInt(1, 1);
    ResultSet rs = ps.executeQuery();
    rs.next();
    BigDecimal b = rs.getBigDecimal(1);
""")

program("ShortRank", """
    Statement st = conn.createStatement();
    ResultSet rs = st.executeQuery("SELECT g_rank FROM genre");
    while (rs.next()) {
        short r = rs.getShort("g_rank");
    }
""")

program("ExecuteUpdateStatement", """
    Statement st = conn.createStatement();
    boolean hasRows = st.execute("UPDATE warehouse SET qty = 0 WHERE w_id = 2");
""")

program("CounterGetters", """
    PreparedStatement ps = conn.prepareStatement("SELECT w_id, label, qty FROM warehouse");
    ResultSet rs = ps.executeQuery();
    rs.next();
    int c = 1;
    int id = rs.getInt(c++);
    String l = rs.getString(c++);
    int q = rs.getInt(c++);
""")


def render(name: str) -> str:
    params, body, extra = PROGRAMS[name]
    lines = [
        "import java.math.BigDecimal;",
        "import java.sql.*;",
        "",
        f"public class {name} {{",
        f"    public void run(Connection conn{params}) throws SQLException {{",
    ]
    lines += ["        " + ln if ln else "" for ln in body.splitlines()]
    lines.append("    }")
    if extra:
        lines.append("")
        lines += ["    " + ln if ln else "" for ln in extra.splitlines()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_programs():
    prog_dir = CORPUS / "programs"
    prog_dir.mkdir(parents=True, exist_ok=True)
    for old in prog_dir.glob("*"):
        old.unlink()
    (CORPUS / "schema.sql").write_text(SCHEMA)
    for name in PROGRAMS:
        (prog_dir / f"{name}.java").write_text(render(name))
        (prog_dir / f"{name}.rows").write_text(ROWS)


def label():
    sys.path.insert(0, str(ROOT / "src"))
    from oopsie.javafront import parse_java
    from oopsie.oracle import parse_rows, render_expect, run_program
    from oopsie.schema import load_schema
    from oopsie.typemap import load_conversion_table

    catalog = load_schema((CORPUS / "schema.sql").read_text())
    table = load_conversion_table()
    pos = neg = 0
    for src in sorted((CORPUS / "programs").glob("*.java")):
        rel = str(src.relative_to(ROOT))
        unit = parse_java(src.read_text(), rel)
        db = parse_rows(src.with_suffix(".rows").read_text(), catalog)
        labels = run_program(unit, db, table, path_budget=4).labels()
        src.with_suffix(".expect").write_text(render_expect(labels))
        pos += bool(labels)
        neg += not labels
    print(f"labelled {pos} positive and {neg} negative programs")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--label", action="store_true", help="only recompute labels")
    args = ap.parse_args()
    if not args.label:
        write_programs()
    label()
