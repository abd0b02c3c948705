import java.math.BigDecimal;
import java.sql.*;

public class BookedFlag {
    public void insert(Connection connection, int price, boolean booked) throws SQLException {
        PreparedStatement ps = connection.prepareStatement(
            "INSERT INTO ROOMS VALUES (?,?,?,?)");
        ps.setBigDecimal(1, new BigDecimal("7"));
        ps.setString(2, "single");
        ps.setInt(3, price);
        ps.setBoolean(4, booked);
        ps.executeUpdate();
    }
}
