import java.math.BigDecimal;
import java.sql.*;

public class ReassignPrepared {
    public void run(Connection conn) throws SQLException {
        String sql = "SELECT w_id FROM warehouse " + "WHERE label IS NOT NULL AND price IS NULL";
        PreparedStatement pst = conn.prepareStatement(sql);
        sql = "SELECT label FROM warehouse " + "WHERE w_id = ?";
        pst = conn.prepareStatement(sql);
        pst.setInt(1, 2);
        ResultSet rs = pst.executeQuery();
        rs.next();
        String l = rs.getString(1);
    }
}
