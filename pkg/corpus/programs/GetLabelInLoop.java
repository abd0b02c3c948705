import java.math.BigDecimal;
import java.sql.*;

public class GetLabelInLoop {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT label, qty FROM warehouse");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String l = rs.getString("label");
            int q = rs.getInt("quantity");
        }
    }
}
