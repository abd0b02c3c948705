import java.math.BigDecimal;
import java.sql.*;

public class ShortRank {
    public void run(Connection conn) throws SQLException {
        Statement st = conn.createStatement();
        ResultSet rs = st.executeQuery("SELECT g_rank FROM genre");
        while (rs.next()) {
            short r = rs.getShort("g_rank");
        }
    }
}
