import java.sql.*;

public class SequentialBinding {
    public void run(Connection conn, int quantity, String id) throws SQLException {
        PreparedStatement ps1 = conn.prepareStatement("UPDATE warehouse SET qty = ? WHERE label = ?");
        int ctr = 1;
        ps1.setInt(ctr++, quantity);
        ps1.setString(ctr++, id);
    }
}
