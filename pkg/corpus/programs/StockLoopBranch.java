import java.math.BigDecimal;
import java.sql.*;

public class StockLoopBranch {
    public void run(Connection conn, String did, int count) throws SQLException {
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
    }
}
