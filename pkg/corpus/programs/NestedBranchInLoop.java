import java.math.BigDecimal;
import java.sql.*;

public class NestedBranchInLoop {
    public void run(Connection conn) throws SQLException {
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
    }
}
