import java.math.BigDecimal;
import java.sql.*;

public class LoopGetters {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT label, qty, price FROM warehouse");
        ResultSet rs = ps.executeQuery();
        int total = 0;
        while (rs.next()) {
            String l = rs.getString("label");
            total += rs.getInt("qty");
            BigDecimal p = rs.getBigDecimal("price");
        }
    }
}
