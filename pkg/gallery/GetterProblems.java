import java.sql.*;

public class GetterProblems {
    public void run(Connection conn) throws SQLException {
        Statement stmt = conn.createStatement();
        ResultSet rs = stmt.executeQuery(
            "SELECT label, qty FROM warehouse");
        rs.next();
        rs.getInt(1);
        rs.getString(3);
        rs.getString("id");
    }
}
