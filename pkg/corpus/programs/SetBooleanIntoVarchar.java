import java.math.BigDecimal;
import java.sql.*;

public class SetBooleanIntoVarchar {
    public void run(Connection conn, boolean booked, short rank) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("INSERT INTO genre VALUES (?, ?, ?)");
        ps.setInt(1, 9);
        ps.setBoolean(2, booked);
        ps.setShort(3, rank);
    }
}
